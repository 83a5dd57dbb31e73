#include "eulerdamp/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

namespace eud {

namespace {

template <class T>
void write_raw(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T read_raw(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw std::runtime_error("snapshot: truncated header");
    return v;
}

} // namespace

void save_snapshot(const std::string& path, const State& s) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("snapshot: cannot open '" + path + "' for writing");

    const Grid& g = s.grid();
    write_raw<std::uint32_t>(os, static_cast<std::uint32_t>(g.dim));
    write_raw<std::uint32_t>(os, static_cast<std::uint32_t>(g.n));
    write_raw<double>(os, g.length);
    write_raw<double>(os, s.rho_star);
    write_raw<double>(os, s.t);

    auto dump = [&](std::span<const double> v) {
        os.write(reinterpret_cast<const char*>(v.data()),
                 static_cast<std::streamsize>(v.size() * sizeof(double)));
    };
    dump(s.a.component(0));
    for (int c = 0; c < g.dim; ++c) dump(s.u.component(c));
    if (!os) throw std::runtime_error("snapshot: write to '" + path + "' failed");
}

State load_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("snapshot: cannot open '" + path + "'");

    const auto d = read_raw<std::uint32_t>(is);
    const auto n = read_raw<std::uint32_t>(is);
    const auto length = read_raw<double>(is);
    const auto rho_star = read_raw<double>(is);
    const auto t = read_raw<double>(is);
    if (!(rho_star > 0.0)) throw std::runtime_error("snapshot: rho_star must be positive");

    Grid g = Grid::make(static_cast<int>(d), static_cast<int>(n), length);
    State s = State::zero(g, rho_star);
    s.t = t;

    auto slurp = [&](std::span<double> v) {
        is.read(reinterpret_cast<char*>(v.data()),
                static_cast<std::streamsize>(v.size() * sizeof(double)));
        if (!is) throw std::runtime_error("snapshot: payload shorter than (1+d)*N^d values");
    };
    slurp(s.a.component(0));
    for (int c = 0; c < g.dim; ++c) slurp(s.u.component(c));

    is.peek();
    if (!is.eof()) throw std::runtime_error("snapshot: trailing bytes after payload");
    return s;
}

} // namespace eud
