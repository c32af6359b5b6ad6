#include "wgcurv/imgio.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace wgc {

namespace {

// Reads one PNM header token, skipping whitespace and '#' comments.
long next_pnm_int(std::istream& in, const char* what) {
    int ch = in.get();
    while (ch != std::char_traits<char>::eof()) {
        if (ch == '#') {
            while (ch != std::char_traits<char>::eof() && ch != '\n') ch = in.get();
        } else if (std::isspace(ch)) {
            ch = in.get();
            continue;
        } else {
            break;
        }
        ch = in.get();
    }
    if (ch == std::char_traits<char>::eof() || !std::isdigit(ch))
        throw std::runtime_error(std::string("PGM: malformed header (") + what + ")");
    long v = 0;
    while (ch != std::char_traits<char>::eof() && std::isdigit(ch)) {
        v = v * 10 + (ch - '0');
        if (v > 1'000'000'000L) throw std::runtime_error("PGM: header value out of range");
        ch = in.get();
    }
    if (ch != std::char_traits<char>::eof()) in.unget();
    return v;
}

void put_f64(std::ostream& out, double d) {
    const std::uint64_t v = std::bit_cast<std::uint64_t>(d);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw std::runtime_error("field file: truncated payload");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(v);
}

}  // namespace

GrayImage read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_image: cannot open " + path);
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P') throw std::runtime_error("read_image: not a PNM file: " + path);
    if (m1 != '5')
        throw std::runtime_error("read_image: unsupported PNM type (only binary P5): " + path);
    const long w = next_pnm_int(in, "width");
    const long h = next_pnm_int(in, "height");
    const long maxval = next_pnm_int(in, "maxval");
    if (w < 1 || h < 1) throw std::runtime_error("read_image: bad dimensions in " + path);
    if (maxval > 255)
        throw std::runtime_error("read_image: unsupported depth (maxval > 255) in " + path);
    if (maxval < 1) throw std::runtime_error("read_image: bad maxval in " + path);
    const int sep = in.get();  // single whitespace byte before the payload
    if (sep == std::char_traits<char>::eof() || !std::isspace(sep))
        throw std::runtime_error("read_image: malformed header in " + path);
    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    in.read(reinterpret_cast<char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.data.size()))
        throw std::runtime_error("read_image: truncated pixel payload in " + path);
    return img;
}

void write_image(const GrayImage& img, const std::string& path) {
    if (!img.well_formed()) throw std::invalid_argument("write_image: malformed image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_image: cannot open " + path);
    out << "P5\n" << img.width << "\n" << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    out.flush();
    if (!out) throw std::runtime_error("write_image: write failed for " + path);
}

GrayImage visualize_curvature(const ScalarField& field, const VisualizationParams& params) {
    if (!field.well_formed()) throw std::invalid_argument("visualize_curvature: malformed field");
    GrayImage img(field.width, field.height);
    for (std::size_t i = 0; i < field.data.size(); ++i) {
        const double v = std::round(params.offset + params.gain * field.data[i]);
        img.data[i] = static_cast<std::uint8_t>(v >= 255.0 ? 255.0 : (v >= 0.0 ? v : 0.0));
    }
    return img;
}

void write_field(const ScalarField& field, const std::string& path) {
    if (!field.well_formed()) throw std::invalid_argument("write_field: malformed field");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_field: cannot open " + path);
    out << field.width << " " << field.height << "\n";
    for (double d : field.data) put_f64(out, d);
    out.flush();
    if (!out) throw std::runtime_error("write_field: write failed for " + path);
}

ScalarField read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_field: cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("read_field: missing header in " + path);
    std::istringstream hs(header);
    long w = 0, h = 0;
    if (!(hs >> w >> h) || w < 1 || h < 1)
        throw std::runtime_error("read_field: malformed header in " + path);
    std::string rest;
    if (hs >> rest) throw std::runtime_error("read_field: malformed header in " + path);
    ScalarField field(static_cast<int>(w), static_cast<int>(h));
    for (double& d : field.data) d = get_f64(in);
    if (in.get() != std::char_traits<char>::eof())
        throw std::runtime_error("read_field: payload length mismatch in " + path);
    return field;
}

std::string stats_csv(const CurvatureStats& stats) {
    std::ostringstream out;
    out.precision(17);
    out << "metric,value\n";
    out << "mean_abs," << stats.mean_abs << "\n";
    out << "min," << stats.min << "\n";
    out << "max," << stats.max << "\n";
    out << "count," << stats.count << "\n";
    return out.str();
}

}  // namespace wgc
