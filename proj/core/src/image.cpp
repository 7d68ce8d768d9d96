#include "waypath/image.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace waypath {

namespace {

// Next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

int parse_int(const std::string& tok, const char* what) {
    if (tok.empty()) raise(Errc::BadImage, std::string("pgm: missing ") + what);
    for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            raise(Errc::BadImage, std::string("pgm: malformed ") + what);
        }
    }
    return std::stoi(tok);
}

} // namespace

GrayImage read_pgm(std::istream& in) {
    if (next_token(in) != "P5") raise(Errc::BadImage, "pgm: not a P5 file");
    const int width = parse_int(next_token(in), "width");
    const int height = parse_int(next_token(in), "height");
    const int maxval = parse_int(next_token(in), "maxval");
    if (width <= 0 || height <= 0) raise(Errc::BadImage, "pgm: bad dimensions");
    if (maxval != 255) raise(Errc::BadImage, "pgm: only maxval 255 supported");
    // Exactly one whitespace byte separates the header from raster data;
    // next_token has already consumed it.
    GrayImage img(width, height);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
        raise(Errc::BadImage, "pgm: truncated raster");
    }
    return img;
}

GrayImage read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::BadImage, "pgm: cannot open " + path);
    return read_pgm(in);
}

void write_pgm(const GrayImage& img, std::ostream& out) {
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

void write_pgm_file(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::BadImage, "pgm: cannot write " + path);
    write_pgm(img, out);
}

} // namespace waypath
