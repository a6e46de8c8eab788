#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mpirecon/forward.hpp"
#include "mpirecon/grid.hpp"

namespace mpirecon {

/// Writes `<stem>.img` (geometry plus exact float values) and `<stem>.pgm`
/// (8-bit P2 preview, min-max normalized, row 0 first). Returns both paths.
std::vector<std::string> write_image(const std::string& stem, const Image& image);

/// Reads an image from its `.img` sidecar. A `.pgm` path is accepted too: the
/// sidecar next to it supplies the geometry, and when the sidecar carries no
/// values the PGM gray levels scaled to [0,1] are used.
Image read_image(const std::string& path);

void write_image_sidecar(std::ostream& out, const Image& image, bool with_values = true);
void write_pgm(std::ostream& out, const Image& image);

/// Writes one image pair per populated entry (`<dir>/<prefix>_<r><c>`) and a
/// manifest `<dir>/<prefix>_manifest.txt`. Returns every path written.
std::vector<std::string> write_core_field(const std::string& dir, const std::string& prefix,
                                          const CoreOperatorField& field);
CoreOperatorField read_core_field(const std::string& manifest_path);

}  // namespace mpirecon
