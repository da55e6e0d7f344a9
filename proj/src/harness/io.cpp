#include "tropknap/harness/io.hpp"

#include <fstream>
#include <sstream>

namespace tk::harness {

namespace {

// Next non-blank line with comments stripped; false at end of input.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    line = raw;
    return true;
  }
  return false;
}

void two_ints(const std::string& line, int lineno, std::int64_t& x, std::int64_t& y) {
  std::istringstream ss(line);
  std::string rest;
  if (!(ss >> x >> y) || (ss >> rest))
    throw InstanceFormatError(FormatError::malformed_line,
                              "line " + std::to_string(lineno) + ": expected two integers");
}

}  // namespace

KnapsackInstance read_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) throw InstanceFormatError(FormatError::malformed_line, "empty input");
  std::int64_t n, t;
  two_ints(line, lineno, n, t);
  if (n < 0 || t < 0)
    throw InstanceFormatError(FormatError::malformed_line, "header: n and t must be non-negative");
  std::vector<std::pair<std::int64_t, std::int64_t>> items;
  while (next_line(in, line, lineno)) {
    std::int64_t w, p;
    two_ints(line, lineno, w, p);
    if (w <= 0 || p <= 0)
      throw InstanceFormatError(FormatError::non_positive,
                                "line " + std::to_string(lineno) + ": non-positive " + (w <= 0 ? "weight" : "profit"));
    items.emplace_back(w, p);
  }
  if (static_cast<std::int64_t>(items.size()) != n)
    throw InstanceFormatError(FormatError::count_mismatch, "header says " + std::to_string(n) + " items, found " +
                                                               std::to_string(items.size()));
  return KnapsackInstance(std::move(items), t);
}

void write_instance(std::ostream& out, const KnapsackInstance& inst) {
  out << inst.n() << ' ' << inst.capacity() << '\n';
  for (const Item& it : inst.items()) out << it.weight << ' ' << it.profit << '\n';
}

KnapsackInstance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError(FormatError::unreadable, "cannot open " + path.string());
  return read_instance(in);
}

void write_instance(const KnapsackInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_instance(out, inst);
}

std::filesystem::path write_reproducer(const std::filesystem::path& dir, const std::string& label,
                                       const KnapsackInstance& inst, const SeedCtx& seed, const std::string& note) {
  std::filesystem::create_directories(dir);
  auto path = dir / (label + "-" + inst.digest() + ".txt");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# " << label << " seed " << seed.describe() << '\n';
  if (!note.empty()) out << "# " << note << '\n';
  write_instance(out, inst);
  return path;
}

}  // namespace tk::harness
