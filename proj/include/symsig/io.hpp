#ifndef SYMSIG_IO_HPP
#define SYMSIG_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "symsig/invariants.hpp"
#include "symsig/polynomial.hpp"

namespace symsig {

/// Ring / ideal file: a short header (vars, field, order) followed by
/// optional `poly` lines.
struct RingFileData {
    RingRef ring;
    std::vector<Polynomial> polys;
};

/// `char_override` replaces the file's characteristic (0 = rationals); it is
/// rejected for cyclotomic ring files.
RingFileData read_ring_text(const std::string& text,
                            std::optional<std::uint64_t> char_override = {});
RingFileData read_ring_file(const std::string& path,
                            std::optional<std::uint64_t> char_override = {});

/// Group file: dimension, optional cyclotomic conductor and closure cap, and
/// one `generator [[..],..]` line per generator.
struct GroupFileData {
    std::size_t dim = 0;
    FieldRef field = nullptr;
    std::vector<Matrix> generators;
    std::size_t cap = 100000;
};

GroupFileData read_group_text(const std::string& text);
GroupFileData read_group_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace symsig

#endif
