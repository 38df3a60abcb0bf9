// errors.hpp
// Library-wide error types. All are std::runtime_error descendants so the
// CLI can report them uniformly with a nonzero exit status.

#pragma once

#include <stdexcept>
#include <string>

namespace antican {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OriginNotInterior : Error {
  explicit OriginNotInterior(const std::string& w = "origin not interior") : Error(w) {}
};
struct Unbounded : Error {
  explicit Unbounded(const std::string& w = "polyhedron unbounded") : Error(w) {}
};
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w) : Error(w) {}
};
struct InvalidOp : Error {
  explicit InvalidOp(const std::string& w) : Error(w) {}
};
struct NotFano : Error {
  explicit NotFano(const std::string& w = "data is not Fano") : Error(w) {}
};
struct NotLogTerminal : Error {
  explicit NotLogTerminal(const std::string& w = "data is not log terminal") : Error(w) {}
};
struct WrongShape : Error {
  explicit WrongShape(const std::string& w) : Error(w) {}
};
struct RayNotOnTrop : Error {
  explicit RayNotOnTrop(const std::string& w = "ray not on the tropical variety") : Error(w) {}
};
struct UnboundedDirection : Error {
  explicit UnboundedDirection(const std::string& w = "complex unbounded along ray") : Error(w) {}
};
struct NotRankOne : Error {
  explicit NotRankOne(const std::string& w = "class group free rank is not one") : Error(w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};
struct CheckpointCorrupt : Error {
  explicit CheckpointCorrupt(const std::string& w) : Error(w) {}
};
struct SchemaMismatch : Error {
  explicit SchemaMismatch(const std::string& w) : Error(w) {}
};

}  // namespace antican
