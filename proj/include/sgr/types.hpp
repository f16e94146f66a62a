#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <stdexcept>
#include <string>

namespace sgr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;
using Index = Eigen::Index;

// Error categories double as the machine-readable reason emitted by the CLI.
enum class ErrorKind {
  kParse,
  kInvalidInput,
  kInvalidArgument,
  kNumerical,
  kSizeCap,
  kIo,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Weights of the three motif relation matrices R0, R1, R2.
struct MotifWeights {
  double d0 = 1.0;
  double d1 = 1.0;
  double d2 = 1.0;

  bool all_zero() const { return d0 == 0.0 && d1 == 0.0 && d2 == 0.0; }
};

// Side-information weights: community structure, attribute similarity.
struct SideWeights {
  double community = 0.0;
  double attribute = 0.0;
};

}  // namespace sgr
