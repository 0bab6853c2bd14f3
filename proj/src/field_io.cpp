#include "fracsmooth/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "util.hpp"

static_assert(std::endian::native == std::endian::little,
              "field snapshots are defined little-endian");

namespace fracsmooth {

namespace {

constexpr char kMagic[4] = {'F', 'S', 'F', '1'};

void write_u32(std::ostream &out, std::uint32_t v) {
  out.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

void write_f64(std::ostream &out, double v) {
  out.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

std::uint32_t read_u32(std::istream &in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char *>(&v), sizeof(v));
  return v;
}

double read_f64(std::istream &in) {
  double v = 0;
  in.read(reinterpret_cast<char *>(&v), sizeof(v));
  return v;
}

} // namespace

void save_field(std::ostream &out, const RealField &field) {
  bool complex_payload = field.imaginary_defect() > 1e-12;
  out.write(kMagic, 4);
  write_u32(out, static_cast<std::uint32_t>(field.grid.dim));
  write_u32(out, static_cast<std::uint32_t>(field.grid.points_per_axis));
  write_u32(out, complex_payload ? 1u : 0u);
  write_f64(out, field.grid.side_length);
  for (const auto &v : field.values) {
    write_f64(out, v.real());
    if (complex_payload) write_f64(out, v.imag());
  }
  if (!out) throw std::runtime_error("save_field: write failed");
}

RealField load_field(std::istream &in) {
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("load_field: bad magic, not a field snapshot");
  int dim = static_cast<int>(read_u32(in));
  int n = static_cast<int>(read_u32(in));
  std::uint32_t kind = read_u32(in);
  double side = read_f64(in);
  if (kind > 1) throw std::runtime_error("load_field: unknown value kind");
  RealField field{TorusGrid(dim, n, side)};
  for (auto &v : field.values) {
    double re = read_f64(in);
    double im = kind == 1 ? read_f64(in) : 0.0;
    v = {re, im};
  }
  if (!in) throw std::runtime_error("load_field: truncated snapshot");
  return field;
}

void save_field(const std::string &path, const RealField &field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_field: cannot open " + path);
  save_field(out, field);
}

RealField load_field(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_field: cannot open " + path);
  return load_field(in);
}

void export_field_csv(std::ostream &out, const RealField &field) {
  bool complex_payload = field.imaginary_defect() > 1e-12;
  int n = field.grid.points_per_axis;
  if (field.grid.dim == 1)
    out << (complex_payload ? "i,re,im\n" : "i,value\n");
  else
    out << (complex_payload ? "i0,i1,re,im\n" : "i0,i1,value\n");
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    if (field.grid.dim == 1)
      out << i;
    else
      out << i / static_cast<std::size_t>(n) << ',' << i % static_cast<std::size_t>(n);
    out << ',' << detail::format_double(field.values[i].real());
    if (complex_payload) out << ',' << detail::format_double(field.values[i].imag());
    out << '\n';
  }
}

void export_filter_bank_csv(std::ostream &out, const FilterBank &bank) {
  out << "index,radius,s0";
  for (int j = 1; j <= bank.j_max; ++j) out << ",psi_" << j;
  out << '\n';
  for (std::size_t i = 0; i < bank.grid.total_points(); ++i) {
    out << i << ',' << detail::format_double(bank.grid.freq_radius(i)) << ','
        << detail::format_double(bank.s0_filter[i]);
    for (int j = 1; j <= bank.j_max; ++j)
      out << ',' << detail::format_double(bank.band(j)[i]);
    out << '\n';
  }
}

} // namespace fracsmooth
