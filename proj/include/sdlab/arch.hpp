#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sdlab {

enum class ArchKind { mlp, convnet };

// One contiguous slice of the flat parameter vector. Weight segments are
// prunable, bias segments are not.
struct ParamSegment {
  std::size_t offset = 0;
  std::size_t count = 0;
  bool is_weight = false;
  int layer = 0;          // 0-based layer index
  std::size_t fan_in = 0; // used for He-style init scaling
  std::string name;       // e.g. "fc1.weight", "conv2.bias"
};

// Architecture descriptor. layer_sizes encodes, per kind:
//
//   mlp:     {units_in, hidden..., units_out}; at least two entries.
//   convnet: {input_h, input_w, input_channels, kernel_size,
//             conv_channels..., class_count}; at least one conv layer and
//             an odd kernel (stride-1 same-padding convolutions, each
//             followed by ReLU and 2x2 mean pooling, then a linear head).
//
// The flat parameter vector is laid out layer by layer: for every layer the
// weights come first (row-major, output-major for conv kernels:
// [out][in][kh][kw]), then the biases. ReLU is the only activation.
struct ArchSpec {
  ArchKind kind = ArchKind::mlp;
  std::vector<int> layer_sizes;

  bool operator==(const ArchSpec&) const = default;
};

// Throws std::invalid_argument with a description if the spec is malformed.
void validate(const ArchSpec& arch);

std::size_t param_count(const ArchSpec& arch);

// The canonical parameter layout; pure function of the spec.
std::vector<ParamSegment> param_segments(const ArchSpec& arch);

// Expected feature dimension of one input row (mlp: units_in,
// convnet: channels * h * w, rows stored channel-major).
std::size_t input_dim(const ArchSpec& arch);

std::size_t class_count(const ArchSpec& arch);

// "mlp 2,16,16,3" / "convnet 28,28,1,3,8,16,10"; inverse of parse_arch.
std::string to_string(const ArchSpec& arch);
ArchSpec parse_arch(const std::string& text);

// Per-conv-layer geometry (convnet only). Pooling halves each spatial dim
// (floor); a dimension smaller than 2 is left unpooled.
struct ConvLayerGeom {
  int in_ch, out_ch;
  int in_h, in_w;    // before the convolution
  int conv_h, conv_w; // after convolution == before pooling
  int out_h, out_w;  // after pooling
  bool pooled;
};

struct ConvGeometry {
  int kernel = 0;
  std::vector<ConvLayerGeom> layers;
  std::size_t flat_dim = 0; // input size of the linear head
};

ConvGeometry conv_geometry(const ArchSpec& arch);

}  // namespace sdlab
