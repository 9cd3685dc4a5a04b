#include "groupoidal/json_io.hpp"

#include <algorithm>

#include "groupoidal/errors.hpp"
#include "json.hpp"

namespace groupoidal {

using nlohmann::json;  // std::map-backed: keys serialize sorted, deterministic

FiniteInverseSemigroup semigroup_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (j.contains("generators")) {
    std::vector<PartialPerm> gens;
    for (const auto& item : j.at("generators")) {
      gens.push_back(PartialPerm::parse(item.get<std::string>()));
    }
    if (j.contains("degree")) {
      const int degree = j.at("degree").get<int>();
      for (const auto& g : gens) {
        if (g.degree() != degree) {
          throw ParseError("generator degree differs from declared degree");
        }
      }
    }
    return FiniteInverseSemigroup::from_generators(gens);
  }
  if (!j.contains("mul")) {
    throw ParseError("semigroup JSON needs either \"mul\" or \"generators\"");
  }
  auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
  if (j.contains("size") && j.at("size").get<size_t>() != mul.size()) {
    throw ParseError("declared size does not match the table");
  }
  std::optional<std::vector<int>> inv;
  if (j.contains("inv")) inv = j.at("inv").get<std::vector<int>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteInverseSemigroup::from_table(std::move(mul), std::move(inv),
                                            std::move(labels));
}

namespace {

json semigroup_json_object(const FiniteInverseSemigroup& s) {
  json j;
  j["size"] = s.size();
  std::vector<std::vector<int>> mul(s.size(), std::vector<int>(s.size()));
  std::vector<int> inv(s.size());
  for (int a = 0; a < s.size(); ++a) {
    inv[a] = s.inv(a);
    for (int b = 0; b < s.size(); ++b) mul[a][b] = s.mul(a, b);
  }
  j["mul"] = mul;
  j["inv"] = inv;
  j["labels"] = s.labels();
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string semigroup_to_json(const FiniteInverseSemigroup& s) {
  return dump(semigroup_json_object(s));
}

std::string semigroup_canonical_json(const FiniteInverseSemigroup& s) {
  return semigroup_json_object(s).dump();
}

std::string analyze_report_json(const FiniteInverseSemigroup& s) {
  json j;
  j["size"] = s.size();
  j["labels"] = s.labels();
  j["idempotents"] = s.idempotents();
  j["zero"] = s.zero() ? json(*s.zero()) : json(nullptr);
  const auto& g = s.green();
  j["green"]["l_classes"] = g.l_classes;
  j["green"]["r_classes"] = g.r_classes;
  j["green"]["h_classes"] = g.h_classes;
  j["green"]["d_classes"] = g.d_classes;
  j["green"]["j_classes"] = g.j_classes;
  json subgroups = json::array();
  for (int e : s.idempotents()) {
    json entry;
    entry["idempotent"] = s.label(e);
    entry["order"] = s.maximal_subgroup(e).size;
    subgroups.push_back(entry);
  }
  j["maximal_subgroups"] = subgroups;
  j["sigma_group_order"] = s.sigma_group().size;
  j["sigma_classes"] = s.sigma_class();
  json order = json::array();
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (a != b && s.leq(a, b)) order.push_back({a, b});
    }
  }
  j["strict_order_pairs"] = order;
  return dump(j);
}

std::string cosets_report_json(const FiniteInverseSemigroup& s,
                               const CosetSemigroup& ks, const CosetSemigroup& ls) {
  json j;
  j["size"] = ks.size();
  json elems = json::array();
  for (int i = 0; i < ks.size(); ++i) {
    json e;
    e["carrier"] = ks.coset(i).carrier;
    e["subsemigroup"] = ks.coset(i).subsemigroup;
    e["rep"] = ks.coset(i).rep;
    e["directed"] = is_directed(s, ks.coset(i).carrier);
    elems.push_back(e);
  }
  j["cosets"] = elems;
  std::vector<std::vector<int>> mul(ks.size(), std::vector<int>(ks.size()));
  std::vector<int> inv(ks.size());
  for (int a = 0; a < ks.size(); ++a) {
    inv[a] = ks.inverse(a);
    for (int b = 0; b < ks.size(); ++b) mul[a][b] = ks.product(a, b);
  }
  j["mul"] = mul;
  j["inv"] = inv;
  std::vector<int> iota(s.size());
  for (int a = 0; a < s.size(); ++a) iota[a] = ks.iota(a);
  j["iota"] = iota;
  j["zero"] = ks.zero_index();
  j["ls_size"] = ls.size();
  json ls_elems = json::array();
  for (int i = 0; i < ls.size(); ++i) ls_elems.push_back(ls.coset(i).carrier);
  j["ls_cosets"] = ls_elems;
  j["ls_isomorphic_to_s"] = ls.size() == s.size();
  return dump(j);
}

std::string groupoid_report_json(const PatersonGroupoid& pg) {
  json j;
  const auto& g = pg.groupoid;
  j["identities"] = g.identity_labels;
  json arrows = json::array();
  for (int a = 0; a < g.narrows; ++a) {
    json e;
    e["src"] = g.src[a];
    e["dst"] = g.dst[a];
    e["label"] = g.labels[a];
    arrows.push_back(e);
  }
  j["arrows"] = arrows;
  j["components"] = connected_components(g);
  json locals = json::array();
  for (int i = 0; i < g.identities(); ++i) {
    json entry;
    entry["identity"] = g.identity_labels[i];
    entry["order"] = local_group(g, i).size;
    locals.push_back(entry);
  }
  j["local_groups"] = locals;
  return dump(j);
}

std::string actions_report_json(const FiniteInverseSemigroup& s) {
  json j;
  json list = json::array();
  auto describe = [&](const TransitiveAction& x, const std::string& kind,
                      const std::string& at) {
    json e;
    e["kind"] = kind;
    e["at"] = at;
    e["points"] = x.points();
    std::vector<std::string> labels;
    for (int p = 0; p < x.points(); ++p) labels.push_back(x.point_label(p));
    e["point_labels"] = labels;
    e["stabilizer_of_first_point"] = x.stabilizer(0);
    e["universal"] = is_universal(x);
    e["fundamental"] = is_fundamental(x);
    return e;
  };
  for (int e : s.idempotents()) {
    list.push_back(describe(schutzenberger_action(s, e), "schutzenberger",
                            s.label(e)));
  }
  for (const auto& h : enumerate_closed_inverse_subsemigroups(s)) {
    std::string at = "{";
    for (size_t i = 0; i < h.carrier.size(); ++i) {
      if (i) at += ",";
      at += s.label(h.carrier[i]);
    }
    at += "}";
    list.push_back(describe(coset_space_action(s, h.carrier), "coset_space", at));
  }
  j["actions"] = list;
  return dump(j);
}

namespace {

json rational_matrix_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const auto& q = m.at(i, j);
      row.push_back({rational_num(q).str(), rational_den(q).str()});
    }
    rows.push_back(row);
  }
  return rows;
}

json fp_matrix_json(const Matrix<Fp>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).value());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string reps_report_json(const FiniteInverseSemigroup& s,
                             const RationalIrreducibles& irr,
                             const std::vector<uint32_t>& requested_primes) {
  json j;
  j["field"] = "q";
  j["size"] = s.size();
  json reps = json::array();
  long sum = 0;
  std::vector<int> dims;
  for (const auto& rep : irr.reps) {
    json e;
    e["name"] = rep.name;
    e["dim"] = rep.dim;
    e["induced_from"] = rep.induced_from >= 0 ? json(s.label(rep.induced_from))
                                              : json(nullptr);
    e["contracted"] = rep.contracted;
    json mats;
    for (int a = 0; a < s.size(); ++a) {
      mats[s.label(a)] = rational_matrix_json(rep.mats[a]);
    }
    e["matrices"] = mats;
    reps.push_back(e);
    dims.push_back(rep.dim);
    sum += static_cast<long>(rep.dim) * rep.dim;
  }
  j["reps"] = reps;
  j["dims"] = dims;
  j["sum_dim_sq"] = sum;
  j["split_certified"] = irr.split_certified;
  j["requested_verification_primes"] = requested_primes;
  j["verified_simple_primes"] = irr.verified_primes;
  return dump(j);
}

std::string reps_report_json(const FiniteInverseSemigroup& s,
                             const ModularIrreducibles& irr, uint32_t p) {
  json j;
  j["field"] = "gf:" + std::to_string(p);
  j["size"] = s.size();
  json reps = json::array();
  long sum = 0;
  std::vector<int> dims;
  for (const auto& rep : irr.reps) {
    json e;
    e["name"] = rep.name;
    e["dim"] = rep.dim;
    e["induced_from"] = rep.induced_from >= 0 ? json(s.label(rep.induced_from))
                                              : json(nullptr);
    e["contracted"] = rep.contracted;
    json mats;
    for (int a = 0; a < s.size(); ++a) {
      mats[s.label(a)] = fp_matrix_json(rep.mats[a]);
    }
    e["matrices"] = mats;
    reps.push_back(e);
    dims.push_back(rep.dim);
    sum += static_cast<long>(rep.dim) * rep.dim;
  }
  j["reps"] = reps;
  j["dims"] = dims;
  j["sum_dim_sq"] = sum;
  j["split_certified"] = irr.split_certified;
  return dump(j);
}

std::string action_dump_json(const TransitiveAction& x) {
  json j;
  std::vector<std::string> points;
  for (int p = 0; p < x.points(); ++p) points.push_back(x.point_label(p));
  j["points"] = points;
  json moves = json::array();
  const auto& s = x.semigroup();
  for (int a = 0; a < s.size(); ++a) {
    for (int p = 0; p < x.points(); ++p) {
      if (x.defined(a, p)) {
        json m;
        m["s"] = s.label(a);
        m["from"] = p;
        m["to"] = x.act(a, p);
        moves.push_back(m);
      }
    }
  }
  j["moves"] = moves;
  return dump(j);
}

std::string error_json(const std::string& kind, const std::string& message) {
  json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return dump(j);
}

}  // namespace groupoidal
