#include "racklab/rack.hpp"

#include <algorithm>
#include <memory>

namespace racklab {

FiniteRack::FiniteRack(std::string label, std::size_t size, Operation op, std::vector<std::string> names,
                       std::size_t table_threshold)
    : label_(std::move(label)), size_(size), op_(std::move(op)), names_(std::move(names)) {
  if (size_ == 0) throw ParameterError("a rack needs at least one element");
  if (!names_.empty() && names_.size() != size_) throw ParameterError("element name count mismatch");
  if (size_ <= table_threshold) {
    table_.resize(size_ * size_);
    for (std::size_t x = 0; x < size_; ++x) {
      for (std::size_t y = 0; y < size_; ++y) {
        const ElementIndex v = op_(static_cast<ElementIndex>(x), static_cast<ElementIndex>(y));
        if (v >= size_) throw ParameterError("rack operation leaves the universe");
        table_[x * size_ + y] = v;
      }
    }
  }
}

FiniteRack FiniteRack::from_table(std::string label, std::size_t size, std::vector<ElementIndex> table,
                                  std::vector<std::string> names) {
  if (table.size() != size * size) throw ParameterError("operation table has the wrong size");
  for (const auto v : table) {
    if (v >= size) throw ParameterError("operation table entry outside the universe");
  }
  auto shared = std::make_shared<std::vector<ElementIndex>>(std::move(table));
  return FiniteRack(
      std::move(label), size,
      [shared, size](ElementIndex x, ElementIndex y) { return (*shared)[static_cast<std::size_t>(x) * size + y]; },
      std::move(names), std::max(size, kDefaultTableThreshold));
}

std::string FiniteRack::element_name(ElementIndex x) const {
  if (names_.empty()) return std::to_string(x);
  return names_.at(x);
}

AxiomReport verify_axioms(const FiniteRack& rack) {
  const std::size_t n = rack.size();
  AxiomReport report;
  std::vector<std::uint8_t> hit(n);
  for (ElementIndex x = 0; x < n; ++x) {
    std::fill(hit.begin(), hit.end(), 0);
    for (ElementIndex y = 0; y < n; ++y) {
      const ElementIndex v = rack.op(x, y);
      if (hit[v]) {
        report.violation = AxiomReport::Violation::not_bijective;
        report.x = x;
        report.message = "left translation by " + rack.element_name(x) + " is not a bijection (" +
                         rack.element_name(v) + " hit twice)";
        return report;
      }
      hit[v] = 1;
    }
  }
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      const ElementIndex w = rack.op(x, y);
      if (rack.has_table()) {
        const auto rx = rack.row(x);
        const auto ry = rack.row(y);
        const auto rw = rack.row(w);
        for (ElementIndex z = 0; z < n; ++z) {
          if (rx[ry[z]] != rw[rx[z]]) {
            report.violation = AxiomReport::Violation::not_self_distributive;
            report.x = x, report.y = y, report.z = z;
            break;
          }
        }
      } else {
        for (ElementIndex z = 0; z < n; ++z) {
          if (rack.op(x, rack.op(y, z)) != rack.op(w, rack.op(x, z))) {
            report.violation = AxiomReport::Violation::not_self_distributive;
            report.x = x, report.y = y, report.z = z;
            break;
          }
        }
      }
      if (!report.valid()) {
        report.message = "self-distributivity fails at (" + rack.element_name(report.x) + ", " +
                         rack.element_name(report.y) + ", " + rack.element_name(report.z) + ")";
        return report;
      }
    }
  }
  return report;
}

bool is_self_distributive(const FiniteRack& rack) {
  const std::size_t n = rack.size();
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      const ElementIndex w = rack.op(x, y);
      for (ElementIndex z = 0; z < n; ++z) {
        if (rack.op(x, rack.op(y, z)) != rack.op(w, rack.op(x, z))) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<std::uint8_t> membership(const FiniteRack& rack, std::span<const ElementIndex> subset) {
  std::vector<std::uint8_t> in(rack.size(), 0);
  for (const auto x : subset) {
    if (x >= rack.size()) throw ParameterError("subset element outside the universe");
    in[x] = 1;
  }
  return in;
}

}  // namespace

bool is_subrack(const FiniteRack& rack, std::span<const ElementIndex> subset) {
  if (subset.empty()) throw ParameterError("a subrack must be nonempty");
  // Each left translation is injective, so Y |> Y inside Y forces equality.
  const auto in = membership(rack, subset);
  for (const auto a : subset) {
    for (const auto b : subset) {
      if (!in[rack.op(a, b)]) return false;
    }
  }
  return true;
}

bool is_decomposition(const FiniteRack& rack, const SubrackPartition& partition) {
  std::vector<int> block_of(rack.size(), -1);
  std::vector<ElementIndex> all;
  for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
    const auto& block = partition.blocks[i];
    if (block.empty()) return false;
    for (const auto x : block) {
      if (x >= rack.size() || block_of[x] != -1) return false;
      block_of[x] = static_cast<int>(i);
      all.push_back(x);
    }
  }
  if (all.empty()) return false;
  for (const auto a : all) {
    for (const auto b : all) {
      if (block_of[rack.op(a, b)] != block_of[b]) return false;
    }
  }
  return true;
}

bool check_morphism(std::span<const ElementIndex> f, const FiniteRack& source, const FiniteRack& target) {
  if (f.size() != source.size()) throw ParameterError("morphism must be total on the source");
  for (const auto v : f) {
    if (v >= target.size()) throw ParameterError("morphism image outside the target");
  }
  for (ElementIndex x = 0; x < source.size(); ++x) {
    for (ElementIndex y = 0; y < source.size(); ++y) {
      if (f[source.op(x, y)] != target.op(f[x], f[y])) return false;
    }
  }
  return true;
}

// PairClosure ------------------------------------------------------------------

PairClosure::PairClosure(const FiniteRack& rack) : rack_(&rack), color_(rack.size(), 0) {}

bool PairClosure::place(ElementIndex element, std::uint8_t color) {
  std::uint8_t& slot = color_[element];
  if (slot == 0) {
    slot = color;
    members_.push_back(element);
    return true;
  }
  return slot == color;
}

bool PairClosure::run(ElementIndex r, ElementIndex s) {
  for (const auto m : members_) color_[m] = 0;
  members_.clear();
  if (r == s) return false;
  place(r, 1);
  place(s, 2);
  const FiniteRack& rack = *rack_;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    const ElementIndex m = members_[k];
    const std::uint8_t cm = color_[m];
    for (std::size_t i = 0; i <= k; ++i) {
      const ElementIndex a = members_[i];
      if (!place(rack.op(a, m), cm)) return false;
      if (i != k && !place(rack.op(m, a), color_[a])) return false;
    }
  }
  return true;
}

SubrackPartition PairClosure::partition() const {
  SubrackPartition out;
  out.blocks.resize(2);
  for (const auto m : members_) out.blocks[color_[m] - 1].push_back(m);
  for (auto& block : out.blocks) std::sort(block.begin(), block.end());
  return out;
}

std::optional<SubrackPartition> pair_closure(const FiniteRack& rack, ElementIndex r, ElementIndex s) {
  if (r >= rack.size() || s >= rack.size()) throw ParameterError("witness outside the universe");
  if (r == s) throw ParameterError("pair_closure needs distinct witnesses");
  PairClosure closure(rack);
  if (!closure.run(r, s)) return std::nullopt;
  return closure.partition();
}

}  // namespace racklab
