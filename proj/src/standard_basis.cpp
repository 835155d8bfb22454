#include "lsb/standard_basis.hpp"

#include <algorithm>

#include "lsb/division.hpp"

namespace lsb {
namespace {

struct PendingPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t seq;
};

class PairQueue {
 public:
  explicit PairQueue(const OrderingSpec& ord) : ord_(ord) {}

  void push(std::size_t i, std::size_t j, Monomial l) {
    pairs_.push_back(PendingPair{i, j, std::move(l), next_seq_++});
  }

  bool empty() const { return pairs_.empty(); }

  PendingPair pop() {
    auto best = pairs_.begin();
    for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it) {
      const Cmp c = ord_.compare_local(it->lcm, best->lcm);
      if (c == Cmp::Greater || (c == Cmp::Equal && it->seq < best->seq)) best = it;
    }
    PendingPair out = std::move(*best);
    pairs_.erase(best);
    return out;
  }

  /// Gebauer-Moeller style deletion of pairs made redundant by `lead_k`.
  template <class OnDrop>
  void drop_chain(const Monomial& lead_k, std::span<const Polynomial> basis, OnDrop on_drop) {
    std::vector<PendingPair> kept;
    for (PendingPair& p : pairs_) {
      const bool redundant = lead_k.divides(p.lcm) &&
                             lcm(basis[p.i].lead_monomial(), lead_k) != p.lcm &&
                             lcm(basis[p.j].lead_monomial(), lead_k) != p.lcm;
      if (redundant) {
        on_drop(p);
      } else {
        kept.push_back(std::move(p));
      }
    }
    pairs_ = std::move(kept);
  }

 private:
  const OrderingSpec& ord_;
  std::vector<PendingPair> pairs_;
  std::size_t next_seq_ = 0;
};

}  // namespace

std::string_view to_string(PairOutcome outcome) {
  switch (outcome) {
    case PairOutcome::Zero: return "zero";
    case PairOutcome::NewElement: return "new";
    case PairOutcome::ProductCriterion: return "product-criterion";
    case PairOutcome::ChainCriterion: return "chain-criterion";
    case PairOutcome::BeyondTruncation: return "beyond-truncation";
  }
  return "?";
}

MonomialIdeal leading_ideal_of(std::span<const Polynomial> gens) {
  if (gens.empty()) throw UsageError("leading ideal of an empty generator list");
  std::vector<Monomial> leads;
  for (const Polynomial& g : gens) leads.push_back(g.lead_monomial());
  return MonomialIdeal(gens.front().ring(), std::move(leads));
}

namespace {

StandardBasis run_buchberger(std::span<const Polynomial> generators, const StandardBasisOptions& options,
                             std::optional<int> truncation) {
  if (generators.empty()) throw UsageError("standard basis of an empty generator list");
  const Ring ring = generators.front().ring();
  for (const Polynomial& f : generators) {
    if (f.is_zero()) throw UsageError("zero generator");
    if (!f.ring()->same_as(*ring)) throw UsageError("generators use different rings");
  }

  std::vector<Polynomial> basis;
  for (const Polynomial& f : generators) {
    if (!truncation) {
      basis.push_back(f);
    } else if (Polynomial t = f.truncated(*truncation); !t.is_zero()) {
      basis.push_back(std::move(t));
    }
  }
  if (basis.empty()) throw UsageError("every generator vanishes below the truncation degree");
  std::vector<PairRecord> log;
  std::size_t total_steps = 0;
  std::size_t verified = 0;
  PairQueue queue(*ring);

  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      queue.push(i, k, lcm(basis[i].lead_monomial(), basis[k].lead_monomial()));
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  std::size_t processed = 0;
  while (!queue.empty()) {
    if (++processed > options.max_pairs) {
      throw StandardBasisLimitError(
          "standard basis exceeded " + std::to_string(options.max_pairs) + " S-pairs",
          std::move(log));
    }
    PendingPair pair = queue.pop();
    PairRecord rec{pair.i, pair.j, pair.lcm, PairOutcome::Zero, 0, 0};
    if (coprime(basis[pair.i].lead_monomial(), basis[pair.j].lead_monomial())) {
      rec.outcome = PairOutcome::ProductCriterion;
      log.push_back(std::move(rec));
      continue;
    }
    if (truncation && pair.lcm.degree() > *truncation) {
      rec.outcome = PairOutcome::BeyondTruncation;
      log.push_back(std::move(rec));
      continue;
    }

    const Polynomial s = s_polynomial(basis[pair.i], basis[pair.j]);
    Polynomial h(ring);
    if (!s.is_zero()) {
      const std::size_t budget = options.max_steps > total_steps ? options.max_steps - total_steps : 0;
      try {
        if (truncation) {
          h = truncated_reduce(s, basis, *truncation, budget, &rec.steps);
        } else if (options.verify_divisions) {
          DivisionOptions div;
          div.reduce_tail = false;
          div.max_steps = budget;
          DivisionResult res = mora_weak_nf(s, basis, div);
          if (!verify_division(s, basis, res).ok()) {
            throw Error("division certificate failed for pair (" + std::to_string(pair.i) +
                        ", " + std::to_string(pair.j) + ")");
          }
          ++verified;
          rec.steps = res.steps;
          h = std::move(res.remainder);
        } else {
          h = mora_reduce(s, basis, budget, &rec.steps);
        }
      } catch (const ResourceError& e) {
        throw StandardBasisLimitError(e.what(), std::move(log));
      }
    }
    total_steps += rec.steps;

    if (!h.is_zero()) {
      basis.push_back(h.monic());
      const std::size_t k = basis.size() - 1;
      rec.outcome = PairOutcome::NewElement;
      rec.added = k;
      if (options.chain_criterion) {
        queue.drop_chain(basis[k].lead_monomial(), basis, [&log](const PendingPair& p) {
          log.push_back(PairRecord{p.i, p.j, p.lcm, PairOutcome::ChainCriterion, 0, 0});
        });
      }
      add_pairs_for(k);
    }
    log.push_back(std::move(rec));
  }

  StandardBasis out{basis, leading_ideal_of(basis), {}, std::move(log), total_steps, verified};
  out.initial_forms.reserve(basis.size());
  for (const Polynomial& g : basis) out.initial_forms.push_back(g.initial_form());
  return out;
}

}  // namespace

StandardBasis standard_basis(std::span<const Polynomial> generators,
                             const StandardBasisOptions& options) {
  return run_buchberger(generators, options, std::nullopt);
}

StandardBasis truncated_standard_basis(std::span<const Polynomial> generators, int degree,
                                       const StandardBasisOptions& options) {
  if (degree < 0) throw UsageError("negative truncation degree");
  return run_buchberger(generators, options, degree);
}

bool is_standard_basis(std::span<const Polynomial> gens, std::size_t max_steps) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Polynomial s = s_polynomial(gens[i], gens[j]);
      if (s.is_zero()) continue;
      if (!mora_reduce(s, gens, max_steps).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace lsb
