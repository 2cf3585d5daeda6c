#ifndef TABINHIB_MATRIX_H_
#define TABINHIB_MATRIX_H_

#include <cstdint>
#include <vector>

#include "tabinhib/errors.h"

namespace tabinhib {

/// Dense row-major matrix of doubles. Rows index combinations (or pitches),
/// columns index frames, unless a function documents otherwise.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {}

  double& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  const double* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
  double* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }

  bool sameShape(const Matrix& other) const {
    return rows == other.rows && cols == other.cols;
  }
  bool operator==(const Matrix& other) const = default;
};

/// Dense row-major matrix of bytes, used for binary target/prediction tensors.
struct ByteMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> data;

  ByteMatrix() = default;
  ByteMatrix(int r, int c, uint8_t fill = 0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {}

  uint8_t& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  uint8_t operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  bool sameShape(const ByteMatrix& other) const {
    return rows == other.rows && cols == other.cols;
  }
  bool operator==(const ByteMatrix& other) const = default;
};

/// Widen a binary tensor to doubles (used when feeding predictions into the
/// inhibition-energy kernels).
inline Matrix toReal(const ByteMatrix& m) {
  Matrix out(m.rows, m.cols);
  for (size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i];
  return out;
}

inline void requireSameShape(const Matrix& a, const Matrix& b, const char* what) {
  if (!a.sameShape(b)) {
    throw DomainError(std::string(what) + ": shape mismatch (" + std::to_string(a.rows) +
                      "x" + std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                      std::to_string(b.cols) + ")");
  }
}

}  // namespace tabinhib

#endif  // TABINHIB_MATRIX_H_
