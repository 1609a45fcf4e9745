#pragma once

#include <iosfwd>
#include <string>

#include "warp_lis/semilocal_index.hpp"

namespace warp_lis {

/// Current version of the JSON index format.
inline constexpr int kIndexFormatVersion = 1;

/// Writes the index as a versioned JSON document: the sequence, its lookup
/// arrays and Pi. The counting structure is rebuilt on load.
void save_index(const SemiLocalDtwIndex& index, std::ostream& out);
std::string index_to_json(const SemiLocalDtwIndex& index);

/// Throws Errc::io_error for unparsable or mismatching documents and
/// Errc::invariant_violation if the stored arrays are inconsistent.
SemiLocalDtwIndex load_index(std::istream& in);
SemiLocalDtwIndex index_from_json(const std::string& text);

}  // namespace warp_lis
