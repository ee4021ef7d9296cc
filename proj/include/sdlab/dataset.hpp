#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdlab {

// Immutable after construction; rows are feature vectors stored row-major.
struct Dataset {
  std::vector<double> features;  // n * dim, row-major
  std::vector<int> labels;       // n entries in [0, classes)
  std::size_t n = 0;
  std::size_t dim = 0;
  int classes = 0;
  std::string name;

  const double* row(std::size_t i) const { return features.data() + i * dim; }
};

// Throws std::invalid_argument if the invariants do not hold.
void validate(const Dataset& data);

struct LabeledBatch {
  std::vector<double> features;  // rows * dim
  std::vector<int> labels;
  std::size_t rows = 0;
  std::size_t dim = 0;
  int classes = 0;

  const double* row(std::size_t i) const { return features.data() + i * dim; }
};

LabeledBatch batch_from(const Dataset& data, const std::vector<std::size_t>& indices);
LabeledBatch full_batch(const Dataset& data);

// Gaussian clusters (std = spread) around deterministic class centers: for
// dim >= 2 the centers sit on a radius-4 circle in the first two coordinates,
// for dim == 1 at 4*class_id.
Dataset make_blobs(int classes, int per_class, int dim, double spread, std::uint64_t seed);

// Concentric rings in 2D: class c has radius c+1, with Gaussian radial noise.
Dataset make_rings(int classes, int per_class, double noise, std::uint64_t seed);

// IDX ingestion errors carry a kind so callers can distinguish them.
struct IdxError : std::runtime_error {
  enum class Kind { bad_magic, truncated, count_mismatch, io };
  Kind kind;
  IdxError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// Reads a big-endian IDX image/label file pair (magic 0x00000803 for images,
// 0x00000801 for labels). Pixels are scaled to [0,1]. When limit_per_class is
// given, rows are shuffled with a fixed documented seed (kIdxShuffleSeed) and
// at most `limit` rows per class are kept, in original file order.
inline constexpr std::uint64_t kIdxShuffleSeed = 0x49445853;  // "IDXS"
Dataset load_idx(const std::string& images_path, const std::string& labels_path,
                 std::optional<int> limit_per_class = std::nullopt);

// Stratified split: per class, round(count * val_fraction) rows go to the
// validation set after a seeded shuffle. Train and val are disjoint and their
// union is the input.
std::pair<Dataset, Dataset> split(const Dataset& data, double val_fraction,
                                  std::uint64_t seed);

}  // namespace sdlab
