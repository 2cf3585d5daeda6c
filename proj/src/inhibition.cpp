#include "tabinhib/inhibition.h"

#include <cmath>
#include <string>
#include <vector>

#include "tabinhib/errors.h"

namespace tabinhib {

const char* weightSourceName(WeightSource source) {
  return source == WeightSource::CorpusDerived ? "corpus-derived" : "string-constraints";
}

WeightSource weightSourceFromName(const std::string& name) {
  if (name == "corpus-derived") return WeightSource::CorpusDerived;
  if (name == "string-constraints") return WeightSource::StringConstraints;
  throw ParseError("unknown weight source '" + name + "'");
}

InhibitionMatrix weightsFromCooccurrence(const CooccurrenceMatrix& m, int boost) {
  if (boost < 1) throw DomainError("boost must be >= 1, got " + std::to_string(boost));

  InhibitionMatrix w;
  w.dim = m.dim;
  w.config_hash = m.config_hash;
  w.boost = boost;
  w.source = WeightSource::CorpusDerived;
  w.weights = Matrix(m.dim, m.dim);
  for (size_t idx = 0; idx < m.values.data.size(); ++idx) {
    double iou = m.values.data[idx];
    // log1p keeps (1 - iou)^b accurate for boosts up to ~2^20; the endpoints
    // stay exact: iou 0 -> 1, iou 1 -> 0.
    w.weights.data[idx] = boost == 1 ? 1.0 - iou : std::exp(boost * std::log1p(-iou));
  }
  return w;
}

InhibitionMatrix stringConstraintWeights(const FretboardConfig& config) {
  config.validate();
  int dim = config.comboCount();
  int per_string = config.classesPerString();

  InhibitionMatrix w;
  w.dim = dim;
  w.config_hash = config.hash();
  w.boost = 1;
  w.source = WeightSource::StringConstraints;
  w.weights = Matrix(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      bool same_block = (i / per_string) == (j / per_string);
      w.weights(i, j) = (same_block && i != j) ? 1.0 : 0.0;
    }
  }
  return w;
}

namespace {

void checkSheet(const Matrix& sheet, const InhibitionMatrix& w, const char* what) {
  if (sheet.rows != w.dim) {
    throw DomainError(std::string(what) + ": sheet has " + std::to_string(sheet.rows) +
                      " rows, weight matrix dim is " + std::to_string(w.dim));
  }
}

/// z^T W z for one frame column, with the column gathered into a contiguous
/// buffer first.
double frameQuadraticForm(const Matrix& sheet, const Matrix& weights, int n,
                          std::vector<double>& column) {
  int dim = sheet.rows;
  for (int c = 0; c < dim; ++c) column[c] = sheet(c, n);
  double energy = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double* w_row = weights.row(i);
    double dot = 0.0;
    for (int j = 0; j < dim; ++j) dot += w_row[j] * column[j];
    energy += column[i] * dot;
  }
  return energy;
}

}  // namespace

double inhibitionEnergy(const Matrix& sheet, const InhibitionMatrix& w) {
  checkSheet(sheet, w, "inhibition energy");
  int num_frames = sheet.cols;
  if (num_frames == 0) return 0.0;

  std::vector<double> per_frame(num_frames, 0.0);
#pragma omp parallel
  {
    std::vector<double> column(sheet.rows);
#pragma omp for schedule(static)
    for (int n = 0; n < num_frames; ++n) {
      per_frame[n] = frameQuadraticForm(sheet, w.weights, n, column);
    }
  }

  double total = 0.0;
  for (int n = 0; n < num_frames; ++n) total += per_frame[n];
  return total / (2.0 * num_frames);
}

double inhibitionEnergySerial(const Matrix& sheet, const InhibitionMatrix& w) {
  checkSheet(sheet, w, "inhibition energy");
  int num_frames = sheet.cols;
  if (num_frames == 0) return 0.0;

  double total = 0.0;
  for (int n = 0; n < num_frames; ++n) {
    double frame_sum = 0.0;
    for (int i = 0; i < sheet.rows; ++i) {
      for (int j = 0; j < sheet.rows; ++j) {
        frame_sum += sheet(i, n) * sheet(j, n) * w.weights(i, j);
      }
    }
    total += frame_sum;
  }
  return total / (2.0 * num_frames);
}

Matrix inhibitionGradient(const Matrix& sheet, const InhibitionMatrix& w) {
  checkSheet(sheet, w, "inhibition gradient");
  int num_frames = sheet.cols;
  Matrix grad(sheet.rows, sheet.cols);
  if (num_frames == 0) return grad;

  double inv_frames = 1.0 / num_frames;
#pragma omp parallel
  {
    std::vector<double> column(sheet.rows);
#pragma omp for schedule(static)
    for (int n = 0; n < num_frames; ++n) {
      for (int c = 0; c < sheet.rows; ++c) column[c] = sheet(c, n);
      for (int k = 0; k < sheet.rows; ++k) {
        const double* w_row = w.weights.row(k);
        double dot = 0.0;
        for (int j = 0; j < sheet.rows; ++j) dot += w_row[j] * column[j];
        grad(k, n) = dot * inv_frames;
      }
    }
  }
  return grad;
}

Matrix inhibitionGradientSerial(const Matrix& sheet, const InhibitionMatrix& w) {
  checkSheet(sheet, w, "inhibition gradient");
  int num_frames = sheet.cols;
  Matrix grad(sheet.rows, sheet.cols);
  if (num_frames == 0) return grad;

  double inv_frames = 1.0 / num_frames;
  std::vector<double> column(sheet.rows);
  for (int n = 0; n < num_frames; ++n) {
    for (int c = 0; c < sheet.rows; ++c) column[c] = sheet(c, n);
    for (int k = 0; k < sheet.rows; ++k) {
      const double* w_row = w.weights.row(k);
      double dot = 0.0;
      for (int j = 0; j < sheet.rows; ++j) dot += w_row[j] * column[j];
      grad(k, n) = dot * inv_frames;
    }
  }
  return grad;
}

}  // namespace tabinhib
