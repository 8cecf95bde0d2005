#include "gmi/point_set.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gmi {

double WeightedPointSet::total_weight() const {
    double w = 0.0;
    for (const auto& p : points) w += p.weight;
    return w;
}

namespace {

[[noreturn]] void fail_line(std::size_t line, const std::string& msg) {
    throw std::runtime_error("point-set parse error at line " + std::to_string(line) + ": " + msg);
}

}  // namespace

WeightedPointSet parse_point_set(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    WeightedPointSet ps;
    bool have_dim = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream ls(line.substr(start));
        if (!have_dim) {
            std::string tag;
            int d = 0;
            if (!(ls >> tag >> d) || tag != "DIM" || (d != 2 && d != 3))
                fail_line(lineno, "expected header 'DIM 2' or 'DIM 3'");
            ps.dim = d;
            have_dim = true;
            continue;
        }

        WeightedPoint pt;
        for (int c = 0; c < ps.dim; ++c)
            if (!(ls >> pt.coords[c])) fail_line(lineno, "expected " + std::to_string(ps.dim + 1) + " numbers");
        if (!(ls >> pt.weight)) fail_line(lineno, "missing weight");
        std::string extra;
        if (ls >> extra) fail_line(lineno, "trailing token '" + extra + "'");
        if (pt.weight < 0.0) fail_line(lineno, "negative weight");
        ps.points.push_back(pt);
    }
    if (!have_dim) throw std::runtime_error("point-set parse error: missing 'DIM' header");
    return ps;
}

WeightedPointSet load_point_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_point_set(in);
}

void write_point_set(std::ostream& out, const WeightedPointSet& ps) {
    out << "DIM " << ps.dim << "\n";
    char buf[128];
    for (const auto& p : ps.points) {
        for (int c = 0; c < ps.dim; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g ", p.coords[c]);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g\n", p.weight);
        out << buf;
    }
}

namespace {

class PgmScanner {
public:
    explicit PgmScanner(std::istream& in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        data_ = ss.str();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("pgm parse error at byte " + std::to_string(pos_) + ": " + msg);
    }

    // whitespace and '#' comments between header tokens
    void skip_separators() {
        while (pos_ < data_.size()) {
            char c = data_[pos_];
            if (c == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    int next_int(int max_allowed) {
        skip_separators();
        if (pos_ >= data_.size()) fail("unexpected end of input");
        if (!std::isdigit(static_cast<unsigned char>(data_[pos_]))) fail("expected integer");
        long v = 0;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
            v = v * 10 + (data_[pos_] - '0');
            if (v > max_allowed) fail("value exceeds " + std::to_string(max_allowed));
            ++pos_;
        }
        return int(v);
    }

    std::uint8_t raw_byte() {
        if (pos_ >= data_.size()) fail("unexpected end of pixel data");
        return std::uint8_t(data_[pos_++]);
    }

    void expect_single_whitespace() {
        if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_])))
            fail("expected whitespace before pixel data");
        ++pos_;
    }

    char peek_magic(int i) const { return i < int(data_.size()) ? data_[i] : '\0'; }
    void advance(int n) { pos_ += n; }

private:
    std::string data_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage parse_pgm(std::istream& in) {
    PgmScanner sc(in);
    char m0 = sc.peek_magic(0), m1 = sc.peek_magic(1);
    if (m0 != 'P' || (m1 != '2' && m1 != '5')) sc.fail("bad magic, expected P2 or P5");
    bool binary = (m1 == '5');
    sc.advance(2);

    GrayImage img;
    img.width = sc.next_int(1 << 20);
    img.height = sc.next_int(1 << 20);
    img.maxval = sc.next_int(65535);
    if (img.width <= 0 || img.height <= 0) sc.fail("non-positive dimensions");
    if (img.maxval <= 0) sc.fail("non-positive maxval");

    std::size_t n = std::size_t(img.width) * img.height;
    img.pixels.resize(n);
    if (binary) {
        sc.expect_single_whitespace();
        bool wide = img.maxval > 255;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t v = sc.raw_byte();
            if (wide) v = (v << 8) | sc.raw_byte();  // big-endian per PGM
            if (int(v) > img.maxval) sc.fail("pixel exceeds maxval");
            img.pixels[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            int v = sc.next_int(65535);
            if (v > img.maxval) sc.fail("pixel exceeds maxval");
            img.pixels[i] = std::uint32_t(v);
        }
    }
    return img;
}

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_pgm(in);
}

WeightedPointSet image_to_point_set(const GrayImage& img) {
    WeightedPointSet ps(2);
    for (int row = 0; row < img.height; ++row) {
        for (int col = 0; col < img.width; ++col) {
            std::uint32_t v = img.at(row, col);
            if (v == 0) continue;
            ps.add(col + 0.5, img.height - row - 0.5, double(v));
        }
    }
    return ps;
}

WeightedPointSet load_shape(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    char m0 = 0, m1 = 0;
    in.get(m0).get(m1);
    in.seekg(0);
    if (m0 == 'P' && (m1 == '2' || m1 == '5')) return image_to_point_set(parse_pgm(in));
    return parse_point_set(in);
}

}  // namespace gmi
