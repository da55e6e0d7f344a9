#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tropknap/core/instance.hpp"
#include "tropknap/core/monotone_seq.hpp"

namespace tk::base {

// profit: seq[j] = max profit of a subset with weight <= j (sentinel -inf).
// weight: seq[v] = min weight of a subset with profit >= v (sentinel +inf).
enum class Sense { profit, weight };

using NodeId = std::int32_t;

// Dense bit matrix, rows x cols.
class BitTable {
 public:
  BitTable() = default;
  BitTable(std::size_t rows, std::size_t cols) : cols_(cols), bits_((rows * cols + 63) / 64, 0) {}
  void set(std::size_t r, std::size_t c) { bits_[(r * cols_ + c) >> 6] |= std::uint64_t{1} << ((r * cols_ + c) & 63); }
  bool get(std::size_t r, std::size_t c) const { return bits_[(r * cols_ + c) >> 6] >> ((r * cols_ + c) & 63) & 1; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

// How each sequence of a solver run was produced, kept so that any finite
// entry can be traced back to an item subset realizing it.
class WitnessTree {
 public:
  struct Empty {};
  // Best single item per index (buckets of colour coding).
  struct Single {
    std::vector<Item> items;
  };
  // Item-by-item dynamic program; take(i, x - row_start[i]) says item i was
  // used at index x of row i. Profit rows step back by w_i, weight rows by
  // p_i (clamped at 0).
  struct Table {
    std::vector<Item> items;
    BitTable take;
    std::vector<std::int64_t> row_start;
  };
  // One fixed subset, valid at every index it fits.
  struct Fixed {
    std::vector<Item> items;
  };
  struct Conv {
    NodeId a, b;
  };
  struct BestOf {
    std::vector<NodeId> children;
  };
  // Running max over indices <= j (profit) or running min over indices >= v (weight).
  struct Running {
    NodeId child;
  };
  using Payload = std::variant<Empty, Single, Table, Fixed, Conv, BestOf, Running>;

  explicit WitnessTree(Sense sense) : sense_(sense) {}
  Sense sense() const { return sense_; }

  NodeId add(Payload payload, MonotoneSeq seq);
  const MonotoneSeq& seq(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)).seq; }
  void set_seq(NodeId id, MonotoneSeq seq) { nodes_.at(static_cast<std::size_t>(id)).seq = std::move(seq); }
  const Payload& payload(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)).payload; }
  std::size_t size() const { return nodes_.size(); }

  // Items of a subset realizing entry `index` of the node's sequence, whose
  // value must be finite. Profit sense: weight <= index, profit == value.
  // Weight sense: profit >= index, weight == value. Throws logic_error when
  // the recorded data cannot explain the entry.
  std::vector<Item> reconstruct(NodeId id, std::int64_t index) const;

 private:
  struct Node {
    Payload payload;
    MonotoneSeq seq;
  };
  void trace(NodeId id, std::int64_t index, std::int64_t value, std::vector<Item>& out) const;
  Sense sense_;
  std::vector<Node> nodes_;
};

// A computed sequence and, when a tree was supplied, the node that explains it.
struct SeqResult {
  MonotoneSeq seq;
  NodeId node = -1;
};

// Sum of weights and profits of a subset.
std::pair<std::int64_t, std::int64_t> totals(const std::vector<Item>& items);

}  // namespace tk::base
