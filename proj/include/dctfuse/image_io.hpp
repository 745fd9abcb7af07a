#pragma once

#include <cstdint>
#include <string>

#include "dctfuse/raster.hpp"

namespace dctfuse {

// Rec. 601 luma, rounded half away from zero.
std::uint8_t luminance601(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Binary PGM (P5, maxval 255). Header comments are accepted on read; the
// writer emits exactly "P5\n<w> <h>\n255\n" followed by the samples.
GrayRaster load_pgm(const std::string& path);

// Writes to a temporary file in the same directory and renames into
// place, so a failed write leaves no partial output.
void save_pgm(const GrayRaster& raster, const std::string& path);

// Loads PGM (P5), PPM (P6), PNG or JPEG, dispatching on the file's magic
// bytes. Color inputs are reduced to luminance.
GrayRaster load_image(const std::string& path);

// Saves as binary PGM.
void save_image(const GrayRaster& raster, const std::string& path);

}  // namespace dctfuse
