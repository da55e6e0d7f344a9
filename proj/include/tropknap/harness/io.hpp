#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tropknap/core/instance.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::harness {

enum class FormatError { unreadable, malformed_line, non_positive, count_mismatch };

struct InstanceFormatError : std::runtime_error {
  InstanceFormatError(FormatError c, const std::string& what) : std::runtime_error(what), code(c) {}
  FormatError code;
};

// Line 1 "n t", then n lines "w p". '#' starts a comment; blank lines are skipped.
KnapsackInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const KnapsackInstance& inst);
KnapsackInstance parse_instance(const std::filesystem::path& path);
void write_instance(const KnapsackInstance& inst, const std::filesystem::path& path);

// Writes <dir>/<label>-<digest>.txt with the seed path and algorithm in the
// header comments; returns the file written.
std::filesystem::path write_reproducer(const std::filesystem::path& dir, const std::string& label,
                                       const KnapsackInstance& inst, const SeedCtx& seed,
                                       const std::string& note = "");

}  // namespace tk::harness
