#include "ciq/field_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <vector>

namespace ciq {

namespace {

void put_u32(std::vector<unsigned char>& out, std::uint32_t value) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(value >> (8 * i)));
}

void put_f64(std::vector<unsigned char>& out, double value) {
  const auto bits = std::bit_cast<std::uint64_t>(value);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(bits >> (8 * i)));
}

void write_bytes(const std::string& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<unsigned char> header(const LatticeGrid& grid, std::uint32_t components) {
  std::vector<unsigned char> bytes;
  bytes.insert(bytes.end(), {'C', 'I', 'Q', 'F'});
  put_u32(bytes, 1);
  put_u32(bytes, static_cast<std::uint32_t>(grid.n_points));
  put_f64(bytes, grid.spacing);
  put_u32(bytes, components);
  return bytes;
}

class Reader {
 public:
  explicit Reader(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    bytes_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read from '" + path + "' failed");
  }

  std::size_t offset() const { return offset_; }
  std::size_t size() const { return bytes_.size(); }

  std::uint32_t u32() {
    need(4);
    std::uint32_t value = 0;
    for (int i = 0; i < 4; ++i) {
      value |= static_cast<std::uint32_t>(bytes_[offset_ + i]) << (8 * i);
    }
    offset_ += 4;
    return value;
  }

  double f64() {
    need(8);
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) {
      bits |= static_cast<std::uint64_t>(bytes_[offset_ + i]) << (8 * i);
    }
    offset_ += 8;
    return std::bit_cast<double>(bits);
  }

  bool match(const char (&magic)[5]) {
    need(4);
    for (int i = 0; i < 4; ++i) {
      if (bytes_[offset_ + i] != static_cast<unsigned char>(magic[i])) return false;
    }
    offset_ += 4;
    return true;
  }

 private:
  void need(std::size_t n) {
    if (offset_ + n > bytes_.size()) {
      throw FormatError("file truncated", bytes_.size());
    }
  }

  std::vector<unsigned char> bytes_;
  std::size_t offset_ = 0;
};

}  // namespace

void write_field_file(const std::string& path, const ScalarField& field) {
  auto bytes = header(field.grid, 1);
  bytes.reserve(bytes.size() + 8 * field.values.size());
  for (double v : field.values) put_f64(bytes, v);
  write_bytes(path, bytes);
}

void write_field_file(const std::string& path, const VectorField& field) {
  auto bytes = header(field.grid(), 3);
  bytes.reserve(bytes.size() + 24 * field.grid().n_sites());
  for (int i = 0; i < 3; ++i) {
    for (double v : field[i].values) put_f64(bytes, v);
  }
  write_bytes(path, bytes);
}

FieldVariant read_field_file(const std::string& path) {
  Reader reader(path);
  if (!reader.match("CIQF")) throw FormatError("bad magic", 0);

  const std::size_t version_at = reader.offset();
  if (reader.u32() != 1) throw FormatError("unsupported version", version_at);

  const std::size_t n_at = reader.offset();
  const std::uint32_t n = reader.u32();
  if (n < 3 || n % 2 == 0 || n > 0x7fffffff) {
    throw FormatError("n_points must be odd and >= 3", n_at);
  }

  const std::size_t spacing_at = reader.offset();
  const double spacing = reader.f64();
  if (!std::isfinite(spacing) || !(spacing > 0.0)) {
    throw FormatError("spacing must be positive and finite", spacing_at);
  }

  const std::size_t components_at = reader.offset();
  const std::uint32_t components = reader.u32();
  if (components != 1 && components != 3) {
    throw FormatError("n_components must be 1 or 3", components_at);
  }

  const LatticeGrid grid(static_cast<int>(n), spacing);
  std::vector<std::vector<double>> values(components);
  for (auto& component : values) {
    component.resize(grid.n_sites());
    for (double& v : component) {
      const std::size_t at = reader.offset();
      v = reader.f64();
      if (!std::isfinite(v)) throw FormatError("non-finite field value", at);
    }
  }
  if (reader.offset() != reader.size()) {
    throw FormatError("trailing bytes after payload", reader.offset());
  }

  if (components == 1) return ScalarField(grid, std::move(values[0]));
  return VectorField(ScalarField(grid, std::move(values[0])),
                     ScalarField(grid, std::move(values[1])),
                     ScalarField(grid, std::move(values[2])));
}

}  // namespace ciq
