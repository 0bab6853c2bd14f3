#pragma once

#include <iosfwd>
#include <string>

#include "fracsmooth/field.hpp"
#include "fracsmooth/filter_bank.hpp"

namespace fracsmooth {

// Field snapshot, little-endian binary:
//   16-byte header: magic "FSF1", u32 dim, u32 N, u32 value kind
//                   (0 = real f64 samples, 1 = complex interleaved f64)
//   f64 side length L
//   row-major f64 payload (2 N^d values when complex)
// Real-valued fields (imaginary defect <= 1e-12) are stored as kind 0.
void save_field(std::ostream &out, const RealField &field);
RealField load_field(std::istream &in);
void save_field(const std::string &path, const RealField &field);
RealField load_field(const std::string &path);

// CSV interop: index columns, then value (re[, im] when complex)
void export_field_csv(std::ostream &out, const RealField &field);

// columns: flat index, |xi|, s0 filter, one column per band
void export_filter_bank_csv(std::ostream &out, const FilterBank &bank);

} // namespace fracsmooth
