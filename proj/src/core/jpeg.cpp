#include "core/jpeg.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>

#include <jpeglib.h>

#include "core/errors.hpp"

namespace drishti {

namespace {

struct JpegErrorMgr {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX] = {0};
};

void error_exit_handler(j_common_ptr cinfo) {
  auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, mgr->message);
  std::longjmp(mgr->jump, 1);
}

void silent_output(j_common_ptr, int) {}

}  // namespace

bool looks_like_jpeg(std::span<const std::uint8_t> payload) {
  if (payload.size() < 4) return false;
  return payload[0] == 0xFF && payload[1] == 0xD8 &&
         payload[payload.size() - 2] == 0xFF &&
         payload[payload.size() - 1] == 0xD9;
}

Image decode_jpeg(std::span<const std::uint8_t> payload) {
  if (payload.empty()) throw JpegDecodeError("empty payload");

  jpeg_decompress_struct cinfo{};
  JpegErrorMgr err{};
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = error_exit_handler;
  err.pub.emit_message = silent_output;

  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw JpegDecodeError(err.message);
  }

  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, payload.data(), payload.size());
  jpeg_read_header(&cinfo, TRUE);

  if (cinfo.progressive_mode) {
    jpeg_destroy_decompress(&cinfo);
    throw JpegDecodeError("progressive JPEG not supported");
  }

  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  Image img;
  img.width = static_cast<int>(cinfo.output_width);
  img.height = static_cast<int>(cinfo.output_height);
  img.rgb.resize(static_cast<std::size_t>(img.width) * img.height * 3);

  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = img.rgb.data() +
                   static_cast<std::size_t>(cinfo.output_scanline) *
                       img.width * 3;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }

  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return img;
}

std::vector<std::uint8_t> encode_jpeg(const Image& img, int quality) {
  if (img.empty()) throw InvalidArgumentError("encode_jpeg: empty image");

  jpeg_compress_struct cinfo{};
  JpegErrorMgr err{};
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = error_exit_handler;
  err.pub.emit_message = silent_output;

  unsigned char* buf = nullptr;
  unsigned long buflen = 0;

  if (setjmp(err.jump)) {
    jpeg_destroy_compress(&cinfo);
    if (buf) std::free(buf);
    throw RuntimeError(std::string("jpeg encode failed: ") + err.message);
  }

  jpeg_create_compress(&cinfo);
  jpeg_mem_dest(&cinfo, &buf, &buflen);

  cinfo.image_width = static_cast<JDIMENSION>(img.width);
  cinfo.image_height = static_cast<JDIMENSION>(img.height);
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);

  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = const_cast<std::uint8_t*>(
        img.rgb.data() +
        static_cast<std::size_t>(cinfo.next_scanline) * img.width * 3);
    jpeg_write_scanlines(&cinfo, &row, 1);
  }

  jpeg_finish_compress(&cinfo);
  std::vector<std::uint8_t> out(buf, buf + buflen);
  jpeg_destroy_compress(&cinfo);
  std::free(buf);
  return out;
}

}  // namespace drishti
