// error.h - exception types, one per diagnostic tag the CLI can print
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wsm {

// Every failure the library reports carries a short machine-greppable tag;
// the CLI prints "error: <tag>: <message>" and exits 1.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& msg)
        : std::runtime_error(msg), tag_(std::move(tag)) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse", m) {}
};

struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& m) : Error("consistency", m) {}
};

struct InvalidDimensionError : Error {
    explicit InvalidDimensionError(const std::string& m) : Error("invalid-dimension", m) {}
};

struct BoundsError : Error {
    explicit BoundsError(const std::string& m) : Error("bounds", m) {}
};

struct UnknownNodeError : Error {
    explicit UnknownNodeError(const std::string& m) : Error("unknown-node", m) {}
};

struct NotInterTileError : Error {
    explicit NotInterTileError(const std::string& m) : Error("not-inter-tile", m) {}
};

struct PlacementError : Error {
    explicit PlacementError(const std::string& m) : Error("placement", m) {}
};

struct UnroutableError : Error {
    explicit UnroutableError(const std::string& m) : Error("unroutable", m) {}
};

struct FixedRouteError : Error {
    explicit FixedRouteError(const std::string& m) : Error("fixed-route", m) {}
};

struct KindUnusableError : Error {
    explicit KindUnusableError(const std::string& m) : Error("kind-unusable", m) {}
};

struct CalibrationError : Error {
    explicit CalibrationError(const std::string& m) : Error("calibration", m) {}
};

struct InfeasibleCellDelayError : Error {
    explicit InfeasibleCellDelayError(const std::string& m)
        : Error("infeasible-cell-delay", m) {}
};

struct ModelIncompleteError : Error {
    explicit ModelIncompleteError(const std::string& m) : Error("model-incomplete", m) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error("config", m) {}
};

struct EmptyReportError : Error {
    explicit EmptyReportError(const std::string& m) : Error("empty-report", m) {}
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error("io", m) {}
};

} // namespace wsm
