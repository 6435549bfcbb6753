#pragma once

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "fracint/process/ensemble.hpp"

namespace fracint {

/// Shortest round-trip decimal form of a double ('.' separator, locale-free).
[[nodiscard]] inline std::string format_double(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    if (r.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return {buf, r.ptr};
}

/// Columnar CSV: header "t,path_0,...,path_{n-1}", one row per grid node.
inline void write_csv(std::ostream& os, const PathEnsemble& ens) {
    os << "t";
    for (std::size_t p = 0; p < ens.n_paths(); ++p) os << ",path_" << p;
    os << "\r\n";
    for (std::size_t i = 0; i < ens.n_nodes(); ++i) {
        os << format_double(ens.grid().node(i));
        for (std::size_t p = 0; p < ens.n_paths(); ++p) os << ',' << format_double(ens.value(p, i));
        os << "\r\n";
    }
}

/*
 * Binary ensemble layout (all fields little-endian):
 *   offset  0  char[8]  magic "FRACENS1"
 *   offset  8  u32      format version (1)
 *   offset 12  u32      family (0 fbm, 1 rosenblatt, 2 generalized)
 *   offset 16  u64      n_paths
 *   offset 24  u64      n_nodes
 *   offset 32  f64      grid start
 *   offset 40  f64      grid end
 *   offset 48  f64      H
 *   offset 56  f64      sigma
 *   offset 64  u64      seed
 *   offset 72  f64[n_paths * n_nodes]  path-major values
 */
inline constexpr char kBinaryMagic[8] = {'F', 'R', 'A', 'C', 'E', 'N', 'S', '1'};
inline constexpr std::uint32_t kBinaryVersion = 1;

namespace detail {
template <class T>
void put_le(std::ostream& os, T v) {
    static_assert(std::endian::native == std::endian::little, "big-endian hosts need byte swapping");
    char bytes[sizeof(T)];
    std::memcpy(bytes, &v, sizeof(T));
    os.write(bytes, sizeof(T));
}
template <class T>
T get_le(std::istream& is) {
    T v{};
    char bytes[sizeof(T)];
    if (!is.read(bytes, sizeof(T))) throw std::runtime_error("binary ensemble: truncated input");
    std::memcpy(&v, bytes, sizeof(T));
    return v;
}
}  // namespace detail

inline void write_binary(std::ostream& os, const PathEnsemble& ens) {
    os.write(kBinaryMagic, 8);
    detail::put_le<std::uint32_t>(os, kBinaryVersion);
    detail::put_le<std::uint32_t>(os, static_cast<std::uint32_t>(ens.params().family));
    detail::put_le<std::uint64_t>(os, ens.n_paths());
    detail::put_le<std::uint64_t>(os, ens.n_nodes());
    detail::put_le<double>(os, ens.grid().start());
    detail::put_le<double>(os, ens.grid().end());
    detail::put_le<double>(os, ens.params().H);
    detail::put_le<double>(os, ens.params().sigma);
    detail::put_le<std::uint64_t>(os, ens.seed());
    for (double v : ens.raw()) detail::put_le<double>(os, v);
}

struct BinaryEnsemble {
    std::uint32_t family = 0;
    std::uint64_t n_paths = 0;
    std::uint64_t n_nodes = 0;
    double start = 0.0;
    double end = 0.0;
    double H = 0.0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> values;
};

[[nodiscard]] inline BinaryEnsemble read_binary(std::istream& is) {
    char magic[8];
    if (!is.read(magic, 8) || std::memcmp(magic, kBinaryMagic, 8) != 0)
        throw std::runtime_error("binary ensemble: bad magic");
    if (detail::get_le<std::uint32_t>(is) != kBinaryVersion) throw std::runtime_error("binary ensemble: unsupported version");
    BinaryEnsemble b;
    b.family = detail::get_le<std::uint32_t>(is);
    b.n_paths = detail::get_le<std::uint64_t>(is);
    b.n_nodes = detail::get_le<std::uint64_t>(is);
    b.start = detail::get_le<double>(is);
    b.end = detail::get_le<double>(is);
    b.H = detail::get_le<double>(is);
    b.sigma = detail::get_le<double>(is);
    b.seed = detail::get_le<std::uint64_t>(is);
    b.values.resize(b.n_paths * b.n_nodes);
    for (double& v : b.values) v = detail::get_le<double>(is);
    return b;
}

}  // namespace fracint
