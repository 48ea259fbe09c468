#include "cli.h"

int main(int argc, char** argv)
{
    return wsm::run_cli(argc, argv);
}
