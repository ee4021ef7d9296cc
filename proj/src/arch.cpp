#include "sdlab/arch.hpp"

#include <sstream>
#include <stdexcept>

namespace sdlab {

void validate(const ArchSpec& arch) {
  const auto& s = arch.layer_sizes;
  for (int v : s) {
    if (v < 1) throw std::invalid_argument("arch: all layer sizes must be >= 1");
  }
  if (arch.kind == ArchKind::mlp) {
    if (s.size() < 2) throw std::invalid_argument("arch: mlp needs at least 2 layers");
  } else {
    if (s.size() < 6) {
      throw std::invalid_argument(
          "arch: convnet needs {h, w, channels, kernel, conv_channels..., classes}");
    }
    if (s[3] % 2 == 0) throw std::invalid_argument("arch: convnet kernel size must be odd");
  }
}

ConvGeometry conv_geometry(const ArchSpec& arch) {
  validate(arch);
  if (arch.kind != ArchKind::convnet) {
    throw std::invalid_argument("conv_geometry: arch is not a convnet");
  }
  const auto& s = arch.layer_sizes;
  ConvGeometry geom;
  geom.kernel = s[3];
  int h = s[0], w = s[1], ch = s[2];
  for (std::size_t i = 4; i + 1 < s.size(); ++i) {
    ConvLayerGeom layer;
    layer.in_ch = ch;
    layer.out_ch = s[i];
    layer.in_h = h;
    layer.in_w = w;
    layer.conv_h = h;
    layer.conv_w = w;
    layer.pooled = (h >= 2 && w >= 2);
    layer.out_h = layer.pooled ? h / 2 : h;
    layer.out_w = layer.pooled ? w / 2 : w;
    geom.layers.push_back(layer);
    h = layer.out_h;
    w = layer.out_w;
    ch = layer.out_ch;
  }
  geom.flat_dim = static_cast<std::size_t>(ch) * h * w;
  return geom;
}

std::vector<ParamSegment> param_segments(const ArchSpec& arch) {
  validate(arch);
  std::vector<ParamSegment> segs;
  std::size_t offset = 0;
  auto push = [&](std::size_t count, bool is_weight, int layer, std::size_t fan_in,
                  std::string name) {
    segs.push_back({offset, count, is_weight, layer, fan_in, std::move(name)});
    offset += count;
  };

  if (arch.kind == ArchKind::mlp) {
    const auto& s = arch.layer_sizes;
    for (std::size_t l = 0; l + 1 < s.size(); ++l) {
      const auto in = static_cast<std::size_t>(s[l]);
      const auto out = static_cast<std::size_t>(s[l + 1]);
      const std::string base = "fc" + std::to_string(l + 1);
      push(out * in, true, static_cast<int>(l), in, base + ".weight");
      push(out, false, static_cast<int>(l), in, base + ".bias");
    }
  } else {
    const ConvGeometry geom = conv_geometry(arch);
    const auto k = static_cast<std::size_t>(geom.kernel);
    int layer = 0;
    for (const auto& cl : geom.layers) {
      const auto in = static_cast<std::size_t>(cl.in_ch);
      const auto out = static_cast<std::size_t>(cl.out_ch);
      const std::string base = "conv" + std::to_string(layer + 1);
      push(out * in * k * k, true, layer, in * k * k, base + ".weight");
      push(out, false, layer, in * k * k, base + ".bias");
      ++layer;
    }
    const auto classes = static_cast<std::size_t>(arch.layer_sizes.back());
    push(classes * geom.flat_dim, true, layer, geom.flat_dim, "head.weight");
    push(classes, false, layer, geom.flat_dim, "head.bias");
  }
  return segs;
}

std::size_t param_count(const ArchSpec& arch) {
  std::size_t total = 0;
  for (const auto& seg : param_segments(arch)) total += seg.count;
  return total;
}

std::size_t input_dim(const ArchSpec& arch) {
  validate(arch);
  if (arch.kind == ArchKind::mlp) {
    return static_cast<std::size_t>(arch.layer_sizes.front());
  }
  const auto& s = arch.layer_sizes;
  return static_cast<std::size_t>(s[0]) * s[1] * s[2];
}

std::size_t class_count(const ArchSpec& arch) {
  validate(arch);
  return static_cast<std::size_t>(arch.layer_sizes.back());
}

std::string to_string(const ArchSpec& arch) {
  std::ostringstream out;
  out << (arch.kind == ArchKind::mlp ? "mlp" : "convnet") << ' ';
  for (std::size_t i = 0; i < arch.layer_sizes.size(); ++i) {
    if (i) out << ',';
    out << arch.layer_sizes[i];
  }
  return out.str();
}

ArchSpec parse_arch(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  ArchSpec arch;
  if (kind == "mlp") {
    arch.kind = ArchKind::mlp;
  } else if (kind == "convnet") {
    arch.kind = ArchKind::convnet;
  } else {
    throw std::invalid_argument("parse_arch: unknown kind '" + kind + "'");
  }
  std::string rest;
  in >> rest;
  std::istringstream sizes(rest);
  std::string tok;
  while (std::getline(sizes, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("parse_arch: empty size token");
    arch.layer_sizes.push_back(std::stoi(tok));
  }
  validate(arch);
  return arch;
}

}  // namespace sdlab
