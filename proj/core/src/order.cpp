#include "groupoidal/order.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "groupoidal/errors.hpp"

namespace groupoidal {

using detail::set_contains;

bool is_filter(const FiniteInverseSemigroup& s, const std::vector<int>& carrier) {
  if (carrier.empty()) return false;
  for (int a : carrier) {
    if (!s.is_idempotent(a)) return false;
    for (int b : carrier) {
      if (!set_contains(carrier, s.mul(a, b))) return false;
    }
    for (int e : s.idempotents()) {
      if (s.leq(a, e) && !set_contains(carrier, e)) return false;
    }
  }
  return true;
}

Filter make_filter(const FiniteInverseSemigroup& s, std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (!is_filter(s, carrier)) {
    throw ValidationError("set is not a filter in E(S)");
  }
  // the meet of everything in a finite filter is its minimum
  int m = carrier[0];
  for (int e : carrier) m = s.mul(m, e);
  if (!set_contains(carrier, m)) {
    throw ValidationError("filter lacks its own minimum (internal)");
  }
  for (int e : carrier) {
    if (!s.leq(m, e)) {
      throw ValidationError("filter minimum is not below all members (internal)");
    }
  }
  return Filter{std::move(carrier), m};
}

Filter principal_filter(const FiniteInverseSemigroup& s, int e) {
  if (!s.is_idempotent(e)) {
    throw ValidationError("principal filter requires an idempotent");
  }
  std::vector<int> carrier;
  for (int f : s.idempotents()) {
    if (s.leq(e, f)) carrier.push_back(f);
  }
  return make_filter(s, std::move(carrier));
}

std::vector<Filter> enumerate_filters(const FiniteInverseSemigroup& s) {
  std::vector<Filter> out;
  for (int e : s.idempotents()) {
    auto f = principal_filter(s, e);
    if (f.min != e) {
      throw ValidationError("principal filter has unexpected minimum (internal)");
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool is_closed_inverse_subsemigroup(const FiniteInverseSemigroup& s,
                                    const std::vector<int>& carrier) {
  if (carrier.empty()) return false;
  for (int a : carrier) {
    if (!set_contains(carrier, s.inv(a))) return false;
    for (int b : carrier) {
      if (!set_contains(carrier, s.mul(a, b))) return false;
    }
    for (int t = 0; t < s.size(); ++t) {
      if (s.leq(a, t) && !set_contains(carrier, t)) return false;
    }
  }
  return true;
}

ClosedInverseSubsemigroup make_cis(const FiniteInverseSemigroup& s,
                                   std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (!is_closed_inverse_subsemigroup(s, carrier)) {
    throw ValidationError("set is not a closed inverse subsemigroup");
  }
  ClosedInverseSubsemigroup h{std::move(carrier), true};
  if (s.zero() && set_contains(h.carrier, *s.zero())) {
    h.is_proper = false;
  }
  return h;
}

ClosedInverseSubsemigroup bar_closure(const FiniteInverseSemigroup& s,
                                      const Filter& f) {
  std::vector<int> carrier;
  for (int a = 0; a < s.size(); ++a) {
    bool fixes = true;
    for (int e : f.carrier) {
      if (!set_contains(f.carrier, s.mul(s.mul(s.inv(a), e), a)) ||
          !set_contains(f.carrier, s.mul(s.mul(a, e), s.inv(a)))) {
        fixes = false;
        break;
      }
    }
    if (fixes) carrier.push_back(a);
  }
  auto h = make_cis(s, std::move(carrier));
  // its idempotent set must be exactly F
  std::vector<int> es;
  for (int a : h.carrier) {
    if (s.is_idempotent(a)) es.push_back(a);
  }
  if (es != f.carrier) {
    throw ValidationError("bar closure has wrong idempotent set (internal)");
  }
  return h;
}

ClosedInverseSubsemigroup filter_up_in_s(const FiniteInverseSemigroup& s,
                                         const Filter& f) {
  return make_cis(s, s.up_closure(f.carrier));
}

std::vector<int> close_up_inverse(const FiniteInverseSemigroup& s,
                                  std::vector<int> seed, std::size_t cap) {
  std::set<int> have(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(have.begin(), have.end());
    for (int a : cur) {
      if (have.insert(s.inv(a)).second) grew = true;
      for (int b : cur) {
        if (have.insert(s.mul(a, b)).second) grew = true;
      }
      for (int t = 0; t < s.size(); ++t) {
        if (s.leq(a, t) && have.insert(t).second) grew = true;
      }
    }
    if (have.size() > cap) {
      throw CapExceededError("closure exceeds cap of " + std::to_string(cap));
    }
  }
  return {have.begin(), have.end()};
}

std::vector<ClosedInverseSubsemigroup> enumerate_closed_inverse_subsemigroups(
    const FiniteInverseSemigroup& s, std::size_t cap) {
  // Breadth-first search over closures: every closed inverse subsemigroup is
  // reached by adding its elements one at a time to a singleton closure.
  std::set<std::vector<int>> found;
  std::queue<std::vector<int>> work;
  for (int a = 0; a < s.size(); ++a) {
    auto c = close_up_inverse(s, {a}, cap);
    if (found.insert(c).second) work.push(c);
  }
  while (!work.empty()) {
    auto h = work.front();
    work.pop();
    if (found.size() > cap) {
      throw CapExceededError("closed inverse subsemigroup count exceeds cap");
    }
    for (int x = 0; x < s.size(); ++x) {
      if (set_contains(h, x)) continue;
      auto seed = h;
      seed.push_back(x);
      auto k = close_up_inverse(s, std::move(seed), cap);
      if (found.insert(k).second) work.push(k);
    }
  }
  std::vector<std::vector<int>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() != b.size() ? a.size() < b.size() : a < b;
                   });
  std::vector<ClosedInverseSubsemigroup> out;
  out.reserve(sorted.size());
  for (auto& c : sorted) {
    out.push_back(make_cis(s, std::move(c)));
  }
  return out;
}

std::optional<int> conjugacy_witness(const FiniteInverseSemigroup& s,
                                     const std::vector<int>& h,
                                     const std::vector<int>& k) {
  for (int a = 0; a < s.size(); ++a) {
    std::vector<int> aha, aka;
    for (int x : h) aha.push_back(s.mul(s.mul(a, x), s.inv(a)));
    for (int y : k) aka.push_back(s.mul(s.mul(s.inv(a), y), a));
    std::sort(aha.begin(), aha.end());
    aha.erase(std::unique(aha.begin(), aha.end()), aha.end());
    std::sort(aka.begin(), aka.end());
    aka.erase(std::unique(aka.begin(), aka.end()), aka.end());
    if (s.up_closure(aha) == k && s.up_closure(aka) == h) {
      return a;
    }
  }
  return std::nullopt;
}

std::vector<WideSubgroupPair> wide_subsemigroups_vs_subgroups(
    const FiniteInverseSemigroup& s) {
  const auto& g = s.sigma_group();
  const auto& proj = s.sigma_class();
  std::vector<WideSubgroupPair> out;
  for (const auto& sub : enumerate_subgroups(g)) {
    std::vector<int> preimage;
    for (int a = 0; a < s.size(); ++a) {
      if (set_contains(sub, proj[a])) preimage.push_back(a);
    }
    auto wide = make_cis(s, std::move(preimage));
    for (int e : s.idempotents()) {
      if (!set_contains(wide.carrier, e)) {
        throw ValidationError("sigma preimage is not wide (internal)");
      }
    }
    out.push_back({std::move(wide), sub});
  }
  return out;
}

}  // namespace groupoidal
