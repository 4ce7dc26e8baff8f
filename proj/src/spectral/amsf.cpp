#include "amod/spectral/amsf.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "amod/errors.hpp"
#include "json.hpp"

namespace amod {

namespace {

constexpr const char* kMagic = "AMSF1";
constexpr const char* kDtype = "f64-interleaved";

std::uint64_t to_little_endian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return r;
  }
  return v;
}

nlohmann::json header_for(const SampledFunction& f) {
  const Grid& g = f.grid();
  return {{"magic", kMagic},
          {"n", g.dim()},
          {"N", g.samples()},
          {"L", g.period()},
          {"side", to_string(g.side())},
          {"dtype", kDtype}};
}

void write_payload(std::ostream& out, const SampledFunction& f) {
  std::string bytes(f.size() * 16, '\0');
  std::size_t pos = 0;
  for (const Complex& v : f.values()) {
    for (double part : {v.real(), v.imag()}) {
      const std::uint64_t le = to_little_endian(std::bit_cast<std::uint64_t>(part));
      std::memcpy(bytes.data() + pos, &le, 8);
      pos += 8;
    }
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ConfigError("failed to write AMSF1 payload");
}

Grid parse_header(const nlohmann::json& h) {
  try {
    if (h.at("magic").get<std::string>() != kMagic) throw ConfigError("not an AMSF1 file");
    if (h.at("dtype").get<std::string>() != kDtype) {
      throw ConfigError("unsupported AMSF1 dtype '" + h.at("dtype").get<std::string>() + "'");
    }
    return Grid(h.at("n").get<int>(), h.at("N").get<std::size_t>(), h.at("L").get<double>(),
                parse_side(h.at("side").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed AMSF1 header: ") + e.what());
  }
}

SampledFunction read_payload(std::istream& in, const Grid& grid) {
  std::string bytes(grid.size() * 16, '\0');
  in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
    throw ConfigError("AMSF1 payload is truncated");
  }
  std::vector<Complex> values(grid.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t re = 0;
    std::uint64_t im = 0;
    std::memcpy(&re, bytes.data() + 16 * i, 8);
    std::memcpy(&im, bytes.data() + 16 * i + 8, 8);
    values[i] = Complex(std::bit_cast<double>(to_little_endian(re)),
                        std::bit_cast<double>(to_little_endian(im)));
  }
  return SampledFunction(grid, std::move(values));
}

nlohmann::json read_header_line(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("AMSF1 header missing");
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed AMSF1 header: ") + e.what());
  }
}

}  // namespace

void write_amsf(std::ostream& out, const SampledFunction& f) {
  out << header_for(f).dump() << '\n';
  write_payload(out, f);
}

SampledFunction read_amsf(std::istream& in) {
  const nlohmann::json h = read_header_line(in);
  if (h.contains("data")) throw ConfigError("sibling-layout AMSF1 needs a file path");
  return read_payload(in, parse_header(h));
}

void write_amsf(const std::filesystem::path& path, const SampledFunction& f, AmsfLayout layout) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
  if (layout == AmsfLayout::embedded) {
    write_amsf(out, f);
    return;
  }
  std::filesystem::path bin = path;
  bin.replace_extension(".bin");
  nlohmann::json h = header_for(f);
  h["data"] = bin.filename().string();
  out << h.dump() << '\n';
  std::ofstream payload(bin, std::ios::binary);
  if (!payload) throw ConfigError("cannot open '" + bin.string() + "' for writing");
  write_payload(payload, f);
}

SampledFunction read_amsf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  const nlohmann::json h = read_header_line(in);
  const Grid grid = parse_header(h);
  if (!h.contains("data")) return read_payload(in, grid);
  const std::filesystem::path bin = path.parent_path() / h.at("data").get<std::string>();
  std::ifstream payload(bin, std::ios::binary);
  if (!payload) throw ConfigError("cannot open AMSF1 payload '" + bin.string() + "'");
  return read_payload(payload, grid);
}

}  // namespace amod
