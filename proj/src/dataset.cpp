#include "sdlab/dataset.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

#include "sdlab/rng.hpp"

namespace sdlab {

void validate(const Dataset& data) {
  if (data.n < 1) throw std::invalid_argument("dataset: must contain at least one row");
  if (data.classes < 1) throw std::invalid_argument("dataset: class count must be >= 1");
  if (data.features.size() != data.n * data.dim) {
    throw std::invalid_argument("dataset: feature buffer size mismatch");
  }
  if (data.labels.size() != data.n) {
    throw std::invalid_argument("dataset: label count mismatch");
  }
  for (int label : data.labels) {
    if (label < 0 || label >= data.classes) {
      throw std::invalid_argument("dataset: label out of range");
    }
  }
  for (double v : data.features) {
    if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite feature");
  }
}

LabeledBatch batch_from(const Dataset& data, const std::vector<std::size_t>& indices) {
  LabeledBatch batch;
  batch.rows = indices.size();
  batch.dim = data.dim;
  batch.classes = data.classes;
  batch.features.resize(batch.rows * batch.dim);
  batch.labels.resize(batch.rows);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    std::memcpy(batch.features.data() + i * batch.dim, data.row(indices[i]),
                batch.dim * sizeof(double));
    batch.labels[i] = data.labels[indices[i]];
  }
  return batch;
}

LabeledBatch full_batch(const Dataset& data) {
  LabeledBatch batch;
  batch.rows = data.n;
  batch.dim = data.dim;
  batch.classes = data.classes;
  batch.features = data.features;
  batch.labels = data.labels;
  return batch;
}

Dataset make_blobs(int classes, int per_class, int dim, double spread, std::uint64_t seed) {
  if (classes < 2) throw std::invalid_argument("make_blobs: classes must be >= 2");
  if (per_class < 1) throw std::invalid_argument("make_blobs: per_class must be >= 1");
  if (dim < 1) throw std::invalid_argument("make_blobs: dim must be >= 1");
  if (!(spread > 0.0)) throw std::invalid_argument("make_blobs: spread must be > 0");

  constexpr double kRadius = 4.0;
  Dataset data;
  data.n = static_cast<std::size_t>(classes) * per_class;
  data.dim = static_cast<std::size_t>(dim);
  data.classes = classes;
  data.name = "blobs";
  data.features.resize(data.n * data.dim);
  data.labels.resize(data.n);

  std::size_t row = 0;
  for (int c = 0; c < classes; ++c) {
    std::vector<double> center(data.dim, 0.0);
    if (dim == 1) {
      center[0] = kRadius * c;
    } else {
      const double angle = 2.0 * std::numbers::pi * c / classes;
      center[0] = kRadius * std::cos(angle);
      center[1] = kRadius * std::sin(angle);
    }
    CounterRng rng(CounterRng::derive(seed, static_cast<std::uint64_t>(c)));
    for (int i = 0; i < per_class; ++i, ++row) {
      double* out = data.features.data() + row * data.dim;
      for (std::size_t j = 0; j < data.dim; ++j) {
        out[j] = center[j] + spread * rng.next_normal();
      }
      data.labels[row] = c;
    }
  }
  return data;
}

Dataset make_rings(int classes, int per_class, double noise, std::uint64_t seed) {
  if (classes < 2) throw std::invalid_argument("make_rings: classes must be >= 2");
  if (per_class < 1) throw std::invalid_argument("make_rings: per_class must be >= 1");
  if (noise < 0.0) throw std::invalid_argument("make_rings: noise must be >= 0");

  Dataset data;
  data.n = static_cast<std::size_t>(classes) * per_class;
  data.dim = 2;
  data.classes = classes;
  data.name = "rings";
  data.features.resize(data.n * 2);
  data.labels.resize(data.n);

  std::size_t row = 0;
  for (int c = 0; c < classes; ++c) {
    CounterRng rng(CounterRng::derive(seed, static_cast<std::uint64_t>(c)));
    const double base_radius = static_cast<double>(c + 1);
    for (int i = 0; i < per_class; ++i, ++row) {
      const double angle = 2.0 * std::numbers::pi * rng.next_double();
      const double radius = base_radius + noise * rng.next_normal();
      data.features[row * 2] = radius * std::cos(angle);
      data.features[row * 2 + 1] = radius * std::sin(angle);
      data.labels[row] = c;
    }
  }
  return data;
}

namespace {

std::uint32_t read_be_u32(std::ifstream& in, const std::string& path) {
  unsigned char buf[4];
  if (!in.read(reinterpret_cast<char*>(buf), 4)) {
    throw IdxError(IdxError::Kind::truncated, "idx: truncated header in " + path);
  }
  return (std::uint32_t{buf[0]} << 24) | (std::uint32_t{buf[1]} << 16) |
         (std::uint32_t{buf[2]} << 8) | std::uint32_t{buf[3]};
}

}  // namespace

Dataset load_idx(const std::string& images_path, const std::string& labels_path,
                 std::optional<int> limit_per_class) {
  std::ifstream images(images_path, std::ios::binary);
  if (!images) throw IdxError(IdxError::Kind::io, "idx: cannot open " + images_path);
  std::ifstream labels(labels_path, std::ios::binary);
  if (!labels) throw IdxError(IdxError::Kind::io, "idx: cannot open " + labels_path);

  const std::uint32_t image_magic = read_be_u32(images, images_path);
  if (image_magic != 0x00000803u) {
    throw IdxError(IdxError::Kind::bad_magic,
                   "idx: bad image magic in " + images_path + " (want 0x00000803)");
  }
  const std::uint32_t n_images = read_be_u32(images, images_path);
  const std::uint32_t rows = read_be_u32(images, images_path);
  const std::uint32_t cols = read_be_u32(images, images_path);

  const std::uint32_t label_magic = read_be_u32(labels, labels_path);
  if (label_magic != 0x00000801u) {
    throw IdxError(IdxError::Kind::bad_magic,
                   "idx: bad label magic in " + labels_path + " (want 0x00000801)");
  }
  const std::uint32_t n_labels = read_be_u32(labels, labels_path);
  if (n_labels != n_images) {
    throw IdxError(IdxError::Kind::count_mismatch,
                   "idx: " + std::to_string(n_images) + " images but " +
                       std::to_string(n_labels) + " labels");
  }
  if (n_images == 0) throw IdxError(IdxError::Kind::count_mismatch, "idx: empty file pair");

  const std::size_t dim = static_cast<std::size_t>(rows) * cols;
  std::vector<unsigned char> pixels(static_cast<std::size_t>(n_images) * dim);
  if (!images.read(reinterpret_cast<char*>(pixels.data()),
                   static_cast<std::streamsize>(pixels.size()))) {
    throw IdxError(IdxError::Kind::truncated, "idx: truncated pixel data in " + images_path);
  }
  std::vector<unsigned char> raw_labels(n_images);
  if (!labels.read(reinterpret_cast<char*>(raw_labels.data()),
                   static_cast<std::streamsize>(raw_labels.size()))) {
    throw IdxError(IdxError::Kind::truncated, "idx: truncated label data in " + labels_path);
  }

  int max_label = 0;
  for (unsigned char l : raw_labels) max_label = std::max(max_label, static_cast<int>(l));
  const int classes = max_label + 1;

  std::vector<std::size_t> keep;
  if (limit_per_class) {
    if (*limit_per_class < 1) {
      throw std::invalid_argument("load_idx: limit_per_class must be >= 1");
    }
    CounterRng rng(kIdxShuffleSeed);
    const auto order = rng.permutation(n_images);
    std::vector<int> taken(classes, 0);
    std::vector<char> selected(n_images, 0);
    for (std::size_t idx : order) {
      const int label = raw_labels[idx];
      if (taken[label] < *limit_per_class) {
        ++taken[label];
        selected[idx] = 1;
      }
    }
    for (std::size_t i = 0; i < n_images; ++i) {
      if (selected[i]) keep.push_back(i);
    }
  } else {
    keep.resize(n_images);
    for (std::size_t i = 0; i < n_images; ++i) keep[i] = i;
  }

  Dataset data;
  data.n = keep.size();
  data.dim = dim;
  data.classes = classes;
  data.name = "idx";
  data.features.resize(data.n * dim);
  data.labels.resize(data.n);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const unsigned char* src = pixels.data() + keep[i] * dim;
    double* dst = data.features.data() + i * dim;
    for (std::size_t j = 0; j < dim; ++j) dst[j] = src[j] / 255.0;
    data.labels[i] = raw_labels[keep[i]];
  }
  return data;
}

std::pair<Dataset, Dataset> split(const Dataset& data, double val_fraction,
                                  std::uint64_t seed) {
  validate(data);
  if (!(val_fraction > 0.0 && val_fraction < 1.0)) {
    throw std::invalid_argument("split: val_fraction must lie in (0, 1)");
  }

  std::vector<std::vector<std::size_t>> by_class(data.classes);
  for (std::size_t i = 0; i < data.n; ++i) by_class[data.labels[i]].push_back(i);

  std::vector<char> in_val(data.n, 0);
  for (int c = 0; c < data.classes; ++c) {
    auto& rows = by_class[c];
    if (rows.empty()) continue;
    CounterRng rng(CounterRng::derive(seed, static_cast<std::uint64_t>(c)));
    const auto order = rng.permutation(rows.size());
    auto take = static_cast<std::size_t>(
        std::llround(val_fraction * static_cast<double>(rows.size())));
    take = std::min(take, rows.size() - 1);  // keep at least one training row
    for (std::size_t i = 0; i < take; ++i) in_val[rows[order[i]]] = 1;
  }

  auto gather = [&](bool val_side, const char* suffix) {
    Dataset out;
    out.dim = data.dim;
    out.classes = data.classes;
    out.name = data.name + suffix;
    for (std::size_t i = 0; i < data.n; ++i) {
      if ((in_val[i] != 0) != val_side) continue;
      out.features.insert(out.features.end(), data.row(i), data.row(i) + data.dim);
      out.labels.push_back(data.labels[i]);
    }
    out.n = out.labels.size();
    return out;
  };

  Dataset train = gather(false, "/train");
  Dataset val = gather(true, "/val");
  if (train.n == 0 || val.n == 0) {
    throw std::invalid_argument("split: a side ended up empty; adjust val_fraction");
  }
  return {std::move(train), std::move(val)};
}

}  // namespace sdlab
