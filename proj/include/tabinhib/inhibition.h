#ifndef TABINHIB_INHIBITION_H_
#define TABINHIB_INHIBITION_H_

#include <cstdint>
#include <string>

#include "tabinhib/cooccurrence.h"
#include "tabinhib/fretboard.h"
#include "tabinhib/matrix.h"

namespace tabinhib {

enum class WeightSource { CorpusDerived, StringConstraints };

const char* weightSourceName(WeightSource source);
WeightSource weightSourceFromName(const std::string& name);

/// Symmetric pairwise inhibition weights in [0,1]. Corpus-derived weights are
/// the boosted complement of averaged IoU; string-constraint weights are 1
/// exactly for distinct pairs within one string block.
struct InhibitionMatrix {
  int dim = 0;
  uint64_t config_hash = 0;
  int boost = 1;
  WeightSource source = WeightSource::CorpusDerived;
  Matrix weights;

  bool operator==(const InhibitionMatrix&) const = default;
};

/// w(ci,cj) = (1 - IoU(i,j))^b, computed in log space so large boosts stay
/// accurate. boost must be >= 1.
InhibitionMatrix weightsFromCooccurrence(const CooccurrenceMatrix& m, int boost);

/// Hard string constraints: weight 1 for distinct combinations within the
/// same string block, 0 otherwise. These are exactly the pairs the per-string
/// softmax head cannot co-activate.
InhibitionMatrix stringConstraintWeights(const FretboardConfig& config);

/// Frame-averaged pairwise co-activation energy of an activation sheet:
/// (1/2N) sum_n sum_i sum_j z[i][n] z[j][n] w(i,j). Both index permutations
/// are summed and halved, matching the weight matrix's symmetry. Parallel
/// over frames; the per-frame terms are summed in frame order, so the result
/// does not depend on thread count.
double inhibitionEnergy(const Matrix& sheet, const InhibitionMatrix& w);

/// Literal triple-loop reference kept for testing and benchmarks.
double inhibitionEnergySerial(const Matrix& sheet, const InhibitionMatrix& w);

/// Gradient of inhibitionEnergy in the sheet: d/dz[k][n] = (1/N) (W z_n)[k].
Matrix inhibitionGradient(const Matrix& sheet, const InhibitionMatrix& w);

/// Serial reference for the gradient.
Matrix inhibitionGradientSerial(const Matrix& sheet, const InhibitionMatrix& w);

}  // namespace tabinhib

#endif  // TABINHIB_INHIBITION_H_
