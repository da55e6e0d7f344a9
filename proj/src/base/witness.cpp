#include "tropknap/base/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tk::base {

NodeId WitnessTree::add(Payload payload, MonotoneSeq seq) {
  nodes_.push_back({std::move(payload), std::move(seq)});
  return static_cast<NodeId>(nodes_.size() - 1);
}

std::vector<Item> WitnessTree::reconstruct(NodeId id, std::int64_t index) const {
  ExtInt v = seq(id).at(index);
  if (!v.finite()) throw std::invalid_argument("reconstruct: entry is not finite");
  std::vector<Item> out;
  trace(id, index, v.raw(), out);
  return out;
}

namespace {

[[noreturn]] void broken(const char* what, std::int64_t index, std::int64_t value) {
  throw std::logic_error(std::string("witness tree: ") + what + " cannot explain index " + std::to_string(index) +
                         " value " + std::to_string(value));
}

bool hits(ExtInt x, std::int64_t value) { return x.finite() && x.raw() == value; }

}  // namespace

void WitnessTree::trace(NodeId id, std::int64_t index, std::int64_t value, std::vector<Item>& out) const {
  const bool prof = sense_ == Sense::profit;
  const Payload& pl = payload(id);
  if (std::holds_alternative<Empty>(pl)) {
    if (value != 0) broken("empty node", index, value);
    return;
  }
  if (const auto* s = std::get_if<Single>(&pl)) {
    if (value == 0 && (prof || index <= 0)) return;
    for (const Item& it : s->items) {
      bool ok = prof ? (it.weight <= index && it.profit == value) : (it.profit >= index && it.weight == value);
      if (ok) {
        out.push_back(it);
        return;
      }
    }
    broken("single-choice node", index, value);
  }
  if (const auto* t = std::get_if<Table>(&pl)) {
    std::int64_t x = index, w = 0, p = 0;
    for (std::size_t i = t->items.size(); i-- > 0;) {
      std::int64_t col = x - t->row_start[i];
      if (col < 0 || col >= static_cast<std::int64_t>(t->take.cols())) broken("table row", index, value);
      if (t->take.get(i, static_cast<std::size_t>(col))) {
        const Item& it = t->items[i];
        out.push_back(it);
        w += it.weight;
        p += it.profit;
        x = prof ? x - it.weight : std::max<std::int64_t>(x - it.profit, 0);
      }
    }
    bool ok = prof ? (w <= index && p == value) : (p >= index && w == value);
    if (!ok) broken("table", index, value);
    return;
  }
  if (const auto* f = std::get_if<Fixed>(&pl)) {
    auto [w, p] = totals(f->items);
    bool ok = prof ? (w <= index && p == value) : (p >= index && w == value);
    if (!ok) broken("fixed subset", index, value);
    out.insert(out.end(), f->items.begin(), f->items.end());
    return;
  }
  if (const auto* c = std::get_if<Conv>(&pl)) {
    const MonotoneSeq& a = seq(c->a);
    const MonotoneSeq& b = seq(c->b);
    std::int64_t lo = std::max(a.start(), index - b.last()), hi = std::min(a.last(), index - b.start());
    for (std::int64_t i = lo; i <= hi; ++i) {
      ExtInt x = a.at(i), y = b.at(index - i);
      if (x.finite() && y.finite() && x.raw() + y.raw() == value) {
        trace(c->a, i, x.raw(), out);
        trace(c->b, index - i, y.raw(), out);
        return;
      }
    }
    broken("convolution node", index, value);
  }
  if (const auto* bo = std::get_if<BestOf>(&pl)) {
    for (NodeId ch : bo->children)
      if (hits(seq(ch).at(index), value)) return trace(ch, index, value, out);
    broken("best-of node", index, value);
  }
  const auto& r = std::get<Running>(pl);
  const MonotoneSeq& ch = seq(r.child);
  if (prof) {
    for (std::int64_t j = std::min(index, ch.last()); j >= ch.start(); --j)
      if (hits(ch.at(j), value)) return trace(r.child, j, value, out);
  } else {
    for (std::int64_t j = std::max(index, ch.start()); j <= ch.last(); ++j)
      if (hits(ch.at(j), value)) return trace(r.child, j, value, out);
  }
  broken("running node", index, value);
}

std::pair<std::int64_t, std::int64_t> totals(const std::vector<Item>& items) {
  std::int64_t w = 0, p = 0;
  for (const Item& it : items) {
    w = checked_add(w, it.weight);
    p = checked_add(p, it.profit);
  }
  return {w, p};
}

}  // namespace tk::base
