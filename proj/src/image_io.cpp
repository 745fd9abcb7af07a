#include "dctfuse/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

#include <jpeglib.h>
#include <png.h>

namespace dctfuse {

namespace {

using FilePtr = std::unique_ptr<std::FILE, int (*)(std::FILE*)>;

GrayRaster gray_from_interleaved(const std::vector<std::uint8_t>& buf, int width,
                                 int height, int channels) {
    GrayRaster raster(width, height);
    const std::size_t pixels = raster.samples().size();
    if (channels == 1) {
        std::copy(buf.begin(), buf.begin() + pixels, raster.samples().begin());
    } else {
        for (std::size_t i = 0; i < pixels; ++i)
            raster.samples()[i] =
                luminance601(buf[channels * i], buf[channels * i + 1], buf[channels * i + 2]);
    }
    return raster;
}

GrayRaster load_png_file(const std::string& path) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.c_str()))
        throw std::runtime_error(path + ": PNG read failed: " + image.message);

    image.format = PNG_FORMAT_RGB;
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        std::string message = image.message;
        png_image_free(&image);
        throw std::runtime_error(path + ": PNG decode failed: " + message);
    }
    return gray_from_interleaved(buffer, static_cast<int>(image.width),
                                 static_cast<int>(image.height), 3);
}

struct JpegErrorJump {
    jpeg_error_mgr pub;
    std::jmp_buf env;
};

void jpeg_error_exit_fn(j_common_ptr cinfo) {
    std::longjmp(reinterpret_cast<JpegErrorJump*>(cinfo->err)->env, 1);
}

GrayRaster load_jpeg_file(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"), &std::fclose);
    if (!fp)
        throw std::runtime_error(path + ": cannot open file");

    jpeg_decompress_struct cinfo{};
    JpegErrorJump jerr{};
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = jpeg_error_exit_fn;

    std::vector<std::uint8_t> buffer;
    std::vector<std::uint8_t> row;
    int width = 0, height = 0, channels = 0;

    if (setjmp(jerr.env)) {
        jpeg_destroy_decompress(&cinfo);
        throw std::runtime_error(path + ": JPEG decode failed");
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fp.get());
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = (cinfo.num_components == 1) ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    width = static_cast<int>(cinfo.output_width);
    height = static_cast<int>(cinfo.output_height);
    channels = cinfo.output_components;
    row.resize(static_cast<std::size_t>(width) * channels);
    buffer.reserve(static_cast<std::size_t>(width) * height * channels);

    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW rows[1] = {row.data()};
        jpeg_read_scanlines(&cinfo, rows, 1);
        buffer.insert(buffer.end(), row.begin(), row.end());
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);

    return gray_from_interleaved(buffer, width, height, channels);
}

}  // namespace

GrayRaster load_image(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe)
        throw std::runtime_error(path + ": cannot open file");
    unsigned char magic[2] = {0, 0};
    probe.read(reinterpret_cast<char*>(magic), 2);
    probe.close();

    if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6'))
        return load_pgm(path);
    if (magic[0] == 0x89 && magic[1] == 'P')
        return load_png_file(path);
    if (magic[0] == 0xFF && magic[1] == 0xD8)
        return load_jpeg_file(path);
    throw std::runtime_error(path + ": unrecognized image format (PGM/PPM, PNG or JPEG expected)");
}

}  // namespace dctfuse
