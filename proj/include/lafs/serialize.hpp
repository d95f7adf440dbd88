#pragma once

#include <iosfwd>
#include <string>

#include "lafs/la_index.hpp"

namespace lafs {

/*
 * Binary artifact format, little-endian throughout: "LAFS" magic, a
 * format version, strategy tag and depth, the tree and tour arrays,
 * then every stored table of the index. Pattern tables are derived
 * data and are rebuilt from the block size on load. The loader
 * validates shapes, ranges, and derivable arrays and throws
 * SerializeError rather than trusting a damaged file.
 */
void save_la_index(const LaIndex& art, std::ostream& out);
LaIndex load_la_index(std::istream& in);

// File wrappers; throw Error when the file cannot be opened/written.
void save_la_index_file(const LaIndex& art, const std::string& path);
LaIndex load_la_index_file(const std::string& path);

}  // namespace lafs
