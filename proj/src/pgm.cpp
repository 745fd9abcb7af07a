#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "dctfuse/image_io.hpp"

namespace dctfuse {

namespace {

// Reads one PNM header token, skipping whitespace and '#' comments.
std::string pnm_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {}
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    return tok;
}

int pnm_int(std::istream& in, const std::string& path, const char* what) {
    const std::string tok = pnm_token(in);
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(path + ": malformed PNM header (" + what + ")");
    }
}

GrayRaster load_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(path + ": cannot open file");

    const std::string magic = pnm_token(in);
    if (magic != "P5" && magic != "P6")
        throw std::runtime_error(path + ": not a binary PGM/PPM file");

    const int width = pnm_int(in, path, "width");
    const int height = pnm_int(in, path, "height");
    const int maxval = pnm_int(in, path, "maxval");
    if (width < 1 || height < 1)
        throw std::runtime_error(path + ": malformed PNM header (dimensions)");
    if (maxval != 255)
        throw std::runtime_error(path + ": unsupported maxval (only 255)");
    // The single whitespace byte separating header from samples was just
    // consumed by the maxval token read.

    GrayRaster raster(width, height);
    const std::size_t pixels = raster.samples().size();
    if (magic == "P5") {
        in.read(reinterpret_cast<char*>(raster.samples().data()),
                static_cast<std::streamsize>(pixels));
        if (static_cast<std::size_t>(in.gcount()) != pixels)
            throw std::runtime_error(path + ": truncated PGM payload");
    } else {
        std::vector<std::uint8_t> rgb(pixels * 3);
        in.read(reinterpret_cast<char*>(rgb.data()),
                static_cast<std::streamsize>(rgb.size()));
        if (static_cast<std::size_t>(in.gcount()) != rgb.size())
            throw std::runtime_error(path + ": truncated PPM payload");
        for (std::size_t i = 0; i < pixels; ++i)
            raster.samples()[i] = luminance601(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
    }
    return raster;
}

}  // namespace

std::uint8_t luminance601(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return quantize_sample(0.299 * r + 0.587 * g + 0.114 * b);
}

GrayRaster load_pgm(const std::string& path) {
    return load_pnm(path);
}

void save_pgm(const GrayRaster& raster, const std::string& path) {
    if (raster.empty())
        throw std::invalid_argument("save_pgm: empty raster");

    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error(path + ": cannot open file for writing");
        out << "P5\n" << raster.width() << ' ' << raster.height() << "\n255\n";
        out.write(reinterpret_cast<const char*>(raster.samples().data()),
                  static_cast<std::streamsize>(raster.samples().size()));
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error(path + ": write failed");
        }
    }

    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error(path + ": rename failed");
    }
}

void save_image(const GrayRaster& raster, const std::string& path) {
    save_pgm(raster, path);
}

}  // namespace dctfuse
