#include "lieprop/proper.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lieprop/spanning.hpp"

namespace lieprop {

std::string to_string(Admits a) {
  switch (a) {
    case Admits::yes:
      return "yes";
    case Admits::no:
      return "no";
    case Admits::undetermined:
      break;
  }
  return "undetermined";
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::rank_one:
      return "rank-one";
    case Criterion::orthogonality:
      return "orthogonality";
    case Criterion::okuda:
      return "okuda";
    case Criterion::kobayashi:
      return "kobayashi";
    case Criterion::subgroup_closure:
      break;
  }
  return "subgroup-closure";
}

bool ProperVerdict::has_witness() const {
  return orthogonal_root || !generators.empty() || orbit_diagram || meeting_point;
}

ProperVerdict decide_rank_one(const RealFormId& g) {
  const RealForm& form = catalog_lookup(g);
  ProperVerdict v;
  v.criterion = Criterion::rank_one;
  const BPlusCone cone = b_plus_basis(form.satake);
  if (cone.dimension < 2) {
    v.admits = Admits::no;
    v.generators = cone.generators;
    v.note = "a-hyperbolic rank " + std::to_string(cone.dimension) + " < 2";
    return v;
  }
  v.admits = Admits::yes;
  std::vector<WeightedDynkinDiagram> pool;
  if (has_spanning_family(form)) {
    for (auto& m : spanning_family(g)) pool.push_back(m.diagram);
    v.note = "generators from the spanning nilpotent family";
  } else {
    pool = cone.generators;
    v.note = "generators from the cone basis";
  }
  RatMat rows;
  for (const auto& w : pool) {
    rows.push_back(w.weights);
    if (rank(rows) < rows.size()) {
      rows.pop_back();
      continue;
    }
    v.generators.push_back(w);
    if (v.generators.size() == 2) break;
  }
  return v;
}

bool is_rank_one_exception(const RealFormId& g) {
  const RealForm& form = catalog_lookup(g);
  return form.real_rank() == 1 || form.name == "sl(3,R)" || form.name == "su*(6)" || form.name == "E6^IV";
}

std::vector<RealFormId> rank_one_exceptions() {
  std::vector<RealFormId> out;
  for (const auto& f : Catalog::builtin().forms())
    if (is_rank_one_exception({f.name})) out.push_back({f.name});
  return out;
}

std::optional<RootVector> orthogonal_witness(const RootSystem& sys, const Subsystem& sub, std::optional<int>* node) {
  const Subsystem perp = orthogonal_complement(sys, sub);
  if (perp.empty()) return std::nullopt;
  const ExtendedDiagram edd = extended_diagram(sys);
  for (std::size_t k = 0; k < edd.nodes.size(); ++k)
    if (perp.roots.count(edd.nodes[k])) {
      if (node) *node = static_cast<int>(k);
      return edd.nodes[k];
    }
  if (node) node->reset();
  return *std::min_element(perp.roots.begin(), perp.roots.end(), canonical_root_less);
}

ProperVerdict orthogonality_criterion(const RealFormId& g, const Subsystem& h_sub) {
  const RootSystem& sys = restricted_root_system(catalog_lookup(g));
  for (const auto& r : h_sub.roots)
    if (!sys.is_root(r)) throw std::invalid_argument("subsystem contains a non-root");
  if (!is_closed_symmetric(sys, h_sub.roots)) throw std::invalid_argument("subsystem is not closed and symmetric");
  ProperVerdict v;
  v.criterion = Criterion::orthogonality;
  v.orthogonal_root = orthogonal_witness(sys, h_sub, &v.extended_node);
  if (v.orthogonal_root) {
    v.admits = Admits::yes;
  } else {
    v.admits = Admits::undetermined;
    v.note = "no restricted root is orthogonal to the subsystem; the criterion is only sufficient";
  }
  return v;
}

ProperVerdict white_subset_criterion(const RealFormId& g, const std::set<int>& restricted_indices) {
  const RootSystem& sys = restricted_root_system(catalog_lookup(g));
  std::vector<RootVector> gens;
  for (int k : restricted_indices) {
    if (k < 0 || k >= sys.rank()) throw std::invalid_argument("restricted simple root index out of range");
    gens.push_back(sys.simple_root(k));
  }
  return orthogonality_criterion(g, closed_subsystem(sys, gens));
}

ProperVerdict white_subset_criterion_nodes(const RealFormId& g, const std::set<int>& white_nodes) {
  const RealForm& form = catalog_lookup(g);
  std::set<int> restricted;
  for (int i : white_nodes) {
    if (i < 0 || i >= form.satake.rank() || form.satake.is_black(i))
      throw std::invalid_argument("node " + std::to_string(i + 1) + " is not a white node of " + form.name);
    const int p = form.satake.partner[i];
    if (p >= 0 && !white_nodes.count(p))
      throw std::invalid_argument("node set is not closed under the arrows of " + form.name);
    restricted.insert(form.restricted.restriction[i]);
  }
  return white_subset_criterion(g, restricted);
}

RatVec principal_restricted_vector(const RealForm& g) {
  return restricted_root_system(g).from_labels(RatVec(g.real_rank(), Rational(2)));
}

RatMat subsystem_span(const Subsystem& sub) {
  RatMat rows;
  for (const auto& r : sub.roots)
    if (r.is_positive()) rows.push_back(to_rational(r.coeffs));
  return rows;
}

namespace {

bool in_span(const RatMat& annihilator_rows, const RatVec& x) {
  for (const auto& row : annihilator_rows) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += row[i] * x[i];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

ProperVerdict okuda_check(const RealFormId& g, const RatMat& a_h, const RatVec& h_phi, std::size_t cap) {
  const RealForm& form = catalog_lookup(g);
  const RootSystem& sys = restricted_root_system(form);
  if (static_cast<int>(h_phi.size()) != sys.rank()) throw std::invalid_argument("vector length does not match real rank");
  ProperVerdict v;
  v.criterion = Criterion::okuda;
  const RatMat ann = annihilator(a_h, sys.rank());
  std::set<RatVec> orbit;
  try {
    orbit = weyl_orbit(sys, h_phi, cap);
  } catch (const OrbitTooLarge& e) {
    v.admits = Admits::undetermined;
    v.note = e.what();
    return v;
  }
  v.orbit_diagram = diagram_of_restricted_vector(form, dominant_representative(sys, h_phi));
  for (const auto& x : orbit)
    if (in_span(ann, x)) {
      v.admits = Admits::no;
      v.meeting_point = x;
      v.note = "the orbit meets a_h";
      return v;
    }
  v.admits = Admits::yes;
  v.note = "the orbit of " + std::to_string(orbit.size()) + " points avoids a_h";
  return v;
}

bool kobayashi_check(const RealFormId& g, const RatMat& a_h, const RatMat& a_l, std::size_t cap) {
  const RootSystem& sys = restricted_root_system(catalog_lookup(g));
  if (a_h.empty() || a_l.empty()) return true;
  std::vector<IntVec> basis;
  for (const auto& b : a_l) {
    if (static_cast<int>(b.size()) != sys.rank()) throw std::invalid_argument("vector length does not match real rank");
    if (!is_zero(b)) basis.push_back(primitive_integer(b));
  }
  if (basis.empty() || rank(a_h) == 0) return true;
  bool disjoint = true;
  for_each_weyl_image(sys, basis, cap, [&](const std::vector<IntVec>& images) {
    if (!disjoint) return;
    RatMat rows;
    for (const auto& im : images) rows.push_back(to_rational(im));
    if (intersection_dim(a_h, rows) > 0) disjoint = false;
  });
  return disjoint;
}

ProperVerdict subgroup_closure(const ProperVerdict& v) {
  if (v.admits != Admits::yes) throw std::invalid_argument("subgroup closure needs a verdict of yes, got " + to_string(v.admits));
  ProperVerdict out = v;
  out.criterion = Criterion::subgroup_closure;
  out.note = "inherited from a larger subgroup (" + to_string(v.criterion) + ")";
  return out;
}

ProperVerdict subgroup_closure(const ProperVerdict& v, const std::vector<std::string>& h_components,
                               const std::vector<std::string>& sub_components) {
  std::map<std::string, int> available;
  for (const auto& c : h_components) ++available[c];
  for (const auto& c : sub_components)
    if (--available[c] < 0) throw std::invalid_argument(c + " is not a factor of the larger subgroup");
  return subgroup_closure(v);
}

}  // namespace lieprop
