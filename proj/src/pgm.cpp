#include "flatnorm/pgm.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "flatnorm/errors.hpp"

namespace flatnorm {

namespace {

struct Reader {
    std::vector<char> data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    unsigned char peek() const { return static_cast<unsigned char>(data[pos]); }
    unsigned char get() { return static_cast<unsigned char>(data[pos++]); }

    // whitespace and '#' comments between header tokens
    void skip_separators() {
        while (!eof()) {
            unsigned char c = peek();
            if (c == '#') {
                while (!eof() && get() != '\n') {}
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    }

    int read_int(const char* what) {
        skip_separators();
        if (eof()) throw ParseError(std::string("expected ") + what, pos);
        if (peek() < '0' || peek() > '9')
            throw ParseError(std::string("expected digit for ") + what, pos);
        long v = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + (get() - '0');
            if (v > 1000000000L) throw ParseError(std::string(what) + " overflows", pos);
        }
        return static_cast<int>(v);
    }
};

} // namespace

BinaryShape load_pgm(const std::string& path, int threshold, double spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("pgm spacing must be > 0");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open PGM file", path);
    Reader r;
    r.data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());

    if (r.data.size() < 2 || r.data[0] != 'P' || (r.data[1] != '2' && r.data[1] != '5'))
        throw ParseError("not a P2/P5 PGM file", 0);
    const bool raw = r.data[1] == '5';
    r.pos = 2;

    int width = r.read_int("width");
    int height = r.read_int("height");
    int maxval = r.read_int("maxval");
    if (width < 1 || height < 1)
        throw ParseError("image dimensions must be >= 1", r.pos);
    if (maxval < 1 || maxval > 255)
        throw ParseError("maxval must be in [1, 255]", r.pos);

    BinaryShape s(width, height, spacing);
    if (raw) {
        if (r.eof()) throw ParseError("missing separator after maxval", r.pos);
        r.get(); // exactly one whitespace byte
        std::size_t need = static_cast<std::size_t>(width) * height;
        if (r.data.size() - r.pos < need)
            throw ParseError("truncated raw pixel data", r.data.size());
        for (int row = 0; row < height; ++row)
            for (int x = 0; x < width; ++x) {
                int v = r.get();
                if (v > maxval) throw ParseError("pixel value exceeds maxval", r.pos - 1);
                s.set_bit(x, height - 1 - row, v >= threshold);
            }
    } else {
        for (int row = 0; row < height; ++row)
            for (int x = 0; x < width; ++x) {
                int v = r.read_int("pixel value");
                if (v > maxval) throw ParseError("pixel value exceeds maxval", r.pos);
                s.set_bit(x, height - 1 - row, v >= threshold);
            }
    }
    return s;
}

void write_pgm(const BinaryShape& s, const std::string& path, bool plain) {
    std::ostringstream out;
    out << (plain ? "P2" : "P5") << "\n" << s.width << " " << s.height << "\n255\n";
    if (plain) {
        for (int row = 0; row < s.height; ++row) {
            for (int x = 0; x < s.width; ++x) {
                out << (s.bit(x, s.height - 1 - row) ? 255 : 0);
                out << (x + 1 == s.width ? '\n' : ' ');
            }
        }
    } else {
        for (int row = 0; row < s.height; ++row)
            for (int x = 0; x < s.width; ++x)
                out.put(s.bit(x, s.height - 1 - row) ? '\xff' : '\0');
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open file for writing", path);
    const std::string payload = out.str();
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!f) throw IoError("write failed", path);
}

} // namespace flatnorm
