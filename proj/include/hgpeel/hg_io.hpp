#pragma once

#include <filesystem>
#include <iosfwd>

#include "hgpeel/hypergraph.hpp"

namespace hgpeel {

// Text ".hg" format:
//   r n m
//   v_1 ... v_r      (m lines)
// Lines starting with '#' are comments. The writer emits the canonical form
// (edges sorted within and in colex order between), LF terminated.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg(const std::filesystem::path& path);

void write_hg(std::ostream& out, const Hypergraph& h);
void write_hg(const std::filesystem::path& path, const Hypergraph& h);

}  // namespace hgpeel
