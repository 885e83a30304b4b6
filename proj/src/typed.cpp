#include "racklab/typed.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace racklab {

namespace {

void require_member(const ThRack& rack, const TupleElement& e, const char* role) {
  bool member = false;
  try {
    member = rack.contains(e);
  } catch (const Error& err) {
    throw NonMemberError(std::string(role) + " element " + e.to_string() + " is malformed for " + rack.label() +
                         ": " + err.what());
  }
  if (!member) {
    throw NonMemberError(std::string(role) + " element " + e.to_string() + " is not a member of " + rack.label());
  }
}

}  // namespace

VerificationResult verify_certificate(const ThRack& rack, const TypeDCertificate& cert) {
  if (!(cert.rack == rack.spec())) {
    return VerificationResult::fail("certificate is declared over " + cert.rack.to_string() + ", not " +
                                    rack.label());
  }
  for (const auto& e : cert.R) require_member(rack, e, "R");
  for (const auto& e : cert.S) require_member(rack, e, "S");
  require_member(rack, cert.r, "witness r");
  require_member(rack, cert.s, "witness s");
  return verify_blocks(rack, cert.R, cert.S, cert.r, cert.s);
}

VerificationResult verify_certificate(const TypeDCertificate& cert) {
  return verify_certificate(*th_rack(cert.rack), cert);
}

ShortcutVerdict conjugacy_shortcut(const Permutation& r, const Permutation& s, std::size_t cap) {
  if (r == s) return ShortcutVerdict::no;
  const Permutation rs = r * s;
  const Permutation sr = s * r;
  if (rs * rs == sr * sr) return ShortcutVerdict::no;
  const std::vector<Permutation> gens{r, s};
  for (const auto& h : generate_subgroup(gens, cap)) {
    if (conjugate(h, r) == s) return ShortcutVerdict::no;
  }
  return ShortcutVerdict::type_d_witness;
}

namespace {

// The hash of an index is the index itself.
struct IndexModel {
  using element_type = ElementIndex;
  const FiniteRack* rack;
  ElementIndex op(ElementIndex a, ElementIndex b) const { return rack->op(a, b); }
};

}  // namespace

VerificationResult verify_index_certificate(const FiniteRack& rack, const IndexCertificate& cert) {
  for (const auto* block : {&cert.R, &cert.S}) {
    for (const auto x : *block) {
      if (x >= rack.size()) throw NonMemberError("index " + std::to_string(x) + " outside the universe");
    }
  }
  if (cert.r >= rack.size() || cert.s >= rack.size()) throw NonMemberError("witness outside the universe");
  return verify_blocks(IndexModel{&rack}, cert.R, cert.S, cert.r, cert.s);
}

DecideResult decide_type_d(const FiniteRack& rack, const DecideOptions& options) {
  const std::uint64_t n = rack.size();
  const std::uint64_t total = n * (n - 1);
  const std::uint64_t limit = std::min(total, options.budget);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  std::atomic<std::uint64_t> next_row{0};
  std::atomic<std::uint64_t> best{kNone};

  auto worker = [&]() {
    PairClosure closure(rack);
    while (true) {
      const std::uint64_t r = next_row.fetch_add(1);
      if (r >= n) return;
      const std::uint64_t row_start = r * (n - 1);
      if (row_start >= limit || row_start > best.load()) return;
      for (std::uint64_t s = 0; s < n; ++s) {
        if (s == r) continue;
        const std::uint64_t ordinal = row_start + (s < r ? s : s - 1);
        if (ordinal >= limit || ordinal >= best.load()) break;
        const auto ri = static_cast<ElementIndex>(r);
        const auto si = static_cast<ElementIndex>(s);
        if (!triple_test(IndexModel{&rack}, ri, si)) continue;
        if (!closure.run(ri, si)) continue;
        std::uint64_t current = best.load();
        while (ordinal < current && !best.compare_exchange_weak(current, ordinal)) {
        }
        break;
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  DecideResult result;
  if (best.load() != kNone) {
    const std::uint64_t ordinal = best.load();
    const auto r = static_cast<ElementIndex>(ordinal / (n - 1));
    std::uint64_t s = ordinal % (n - 1);
    if (s >= r) ++s;
    PairClosure closure(rack);
    closure.run(r, static_cast<ElementIndex>(s));
    const auto partition = closure.partition();
    result.outcome = DecideResult::Outcome::certificate;
    result.certificate =
        IndexCertificate{partition.blocks[0], partition.blocks[1], r, static_cast<ElementIndex>(s)};
    result.pairs_examined = ordinal + 1;
  } else if (limit == total) {
    result.outcome = DecideResult::Outcome::not_type_d;
    result.pairs_examined = total;
  } else {
    result.outcome = DecideResult::Outcome::budget_exhausted;
    result.pairs_examined = limit;
  }
  return result;
}

TypeDCertificate to_tuple_certificate(const MaterializedRack& materialized, const THRackSpec& spec,
                                      const IndexCertificate& cert, std::string generator) {
  TypeDCertificate out;
  out.rack = spec;
  for (const auto x : cert.R) out.R.push_back(materialized.elements.at(x));
  for (const auto x : cert.S) out.S.push_back(materialized.elements.at(x));
  out.r = materialized.elements.at(cert.r);
  out.s = materialized.elements.at(cert.s);
  out.generator = std::move(generator);
  return out;
}

}  // namespace racklab
