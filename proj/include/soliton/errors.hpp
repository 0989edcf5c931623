#ifndef SOLITON_ERRORS_HPP
#define SOLITON_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace soliton {

/// Base of every error thrown by the toolkit. `kind()` is the short
/// machine-readable tag written to error reports.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

/// An argument lies outside the domain where a formula is defined.
class DomainError : public Error {
public:
  DomainError(std::string param, const std::string& what)
      : Error("domain", what), param_(std::move(param)) {}

  const std::string& param() const noexcept { return param_; }

private:
  std::string param_;
};

class StepSizeError : public Error {
public:
  explicit StepSizeError(const std::string& what) : Error("step_size", what) {}
};

class GridTooSmallError : public Error {
public:
  explicit GridTooSmallError(const std::string& what) : Error("grid_too_small", what) {}
};

class EmptyMeshError : public Error {
public:
  explicit EmptyMeshError(const std::string& what) : Error("empty_mesh", what) {}
};

/// Half of a mesh is not single-valued over the reflection plane.
/// Carries the plane position and the offending projection cell.
class NotAGraphError : public Error {
public:
  NotAGraphError(double t, double cell_u, double cell_v, const std::string& what)
      : Error("not_a_graph", what), t_(t), cell_u_(cell_u), cell_v_(cell_v) {}

  double t() const noexcept { return t_; }
  double cell_u() const noexcept { return cell_u_; }
  double cell_v() const noexcept { return cell_v_; }

private:
  double t_;
  double cell_u_;
  double cell_v_;
};

class NoContactError : public Error {
public:
  explicit NoContactError(const std::string& what) : Error("no_contact", what) {}
};

class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error("precondition", what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace soliton

#endif  // SOLITON_ERRORS_HPP
