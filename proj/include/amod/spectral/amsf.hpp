#pragma once

#include <filesystem>
#include <iosfwd>

#include "amod/spectral/sampled_function.hpp"

namespace amod {

// AMSF1 on-disk format for SampledFunction.
//
// A single line of JSON
//   {"magic":"AMSF1","n":1,"N":1024,"L":32.0,"side":"spatial","dtype":"f64-interleaved"}
// terminated by '\n', followed by 2·N^n little-endian IEEE-754 float64 values
// (re, im interleaved) in the grid's storage order: spatial natural order,
// frequency DC-centered. Alternatively the header carries "data":"<name>.bin"
// naming a sibling file that holds the payload, and nothing follows the
// header.
enum class AmsfLayout { embedded, sibling };

void write_amsf(const std::filesystem::path& path, const SampledFunction& f,
                AmsfLayout layout = AmsfLayout::embedded);
SampledFunction read_amsf(const std::filesystem::path& path);

// Stream variants for the embedded layout.
void write_amsf(std::ostream& out, const SampledFunction& f);
SampledFunction read_amsf(std::istream& in);

}  // namespace amod
