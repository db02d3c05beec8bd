#pragma once

#include <string>

#include "jspectra/numkernel.hpp"

namespace jspectra::mmio {

/// Reads a Matrix Market file (array or coordinate, real or integer,
/// general or symmetric).  Symmetric storage is honored: only the lower
/// triangle may appear and it is mirrored.
Matrix read_matrix(const std::string& path);

enum class Layout { Array, Coordinate };

/// Writes with 17 significant digits, atomically (temp file + rename).
/// `symmetric` selects symmetric storage and requires a symmetric input.
void write_matrix(const std::string& path, const Matrix& m, bool symmetric,
                  Layout layout = Layout::Coordinate);

}  // namespace jspectra::mmio
