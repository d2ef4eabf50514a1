#include "grpd/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grpd/constructions.hpp"
#include "grpd/corpus.hpp"
#include "grpd/gdf.hpp"
#include "grpd/series.hpp"

namespace grpd {

using nlohmann::json;

std::vector<std::string> split_members(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (auto& x : out) {
    auto b = x.find_first_not_of(' ');
    auto e = x.find_last_not_of(' ');
    x = b == std::string::npos ? "" : x.substr(b, e - b + 1);
  }
  return out;
}

namespace {

/// An error in reading an input, reported as invalid input whatever its kind.
struct InputError {
  Error error;
};

struct Outcome {
  bool ok = true;
  json result = json::object();
  std::vector<std::string> witness;
  std::string reason;
  std::string human;
};

struct Options {
  bool json = false;
  std::optional<std::size_t> max_size;
  std::uint64_t seed = 1;
};

Options opts;

template <class F>
auto reading(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError{e};
  }
}

void bound_check(const Groupoid& g) {
  if (opts.max_size && g.size() > *opts.max_size)
    fail(ErrorKind::TooLarge,
         "input has " + std::to_string(g.size()) + " elements, above --max-size " +
             std::to_string(*opts.max_size),
         std::to_string(*opts.max_size));
}

Document load(const std::string& path) {
  Document d = reading([&] { return load_document(path); });
  if (std::holds_alternative<Groupoid>(d.payload)) bound_check(d.groupoid());
  if (auto a = std::get_if<ActionDoc>(&d.payload)) bound_check(a->group);
  return d;
}

Groupoid load_groupoid(const std::string& path) {
  Document d = load(path);
  return reading([&] { return d.groupoid(); });
}

Groupoid load_group(const std::string& path) {
  Groupoid g = load_groupoid(path);
  if (!is_group(g))
    throw InputError{Error(ErrorKind::NotAGroup, "'" + path + "' is not a group")};
  return g;
}

ElemSet resolve(const Groupoid& g, const std::vector<std::string>& labels) {
  return reading([&] {
    if (labels.empty()) fail(ErrorKind::EmptySubset, "the subset is empty");
    return subset_of_labels(g, labels);
  });
}

ElemSet load_subset(const Groupoid& g, const std::string& path) {
  Document d = load(path);
  return resolve(g, reading([&] { return d.subset().members; }));
}

std::vector<ElemSet> load_chain(const Groupoid& g, const std::string& path) {
  Document d = load(path);
  std::vector<ElemSet> chain;
  for (const auto& term : reading([&] { return d.series().chain; })) chain.push_back(resolve(g, term));
  return chain;
}

std::vector<std::string> labels_of(const Groupoid& g, const ElemSet& s) {
  std::vector<std::string> out;
  for (Elem e : s.members()) out.push_back(g.label(e));
  return out;
}

std::vector<std::string> labels_of(const Groupoid& g, const std::vector<Elem>& s) {
  std::vector<std::string> out;
  for (Elem e : s) out.push_back(g.label(e));
  return out;
}

std::string braces(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out + "}";
}

json map_json(const Hom& h) {
  json m = json::object();
  for (Elem e = 0; e < h.domain.size(); ++e) m[h.domain.label(e)] = h.codomain.label(h.map[e]);
  return m;
}

std::string map_text(const Hom& h) {
  std::string out;
  for (Elem e = 0; e < h.domain.size(); ++e)
    out += "  " + h.domain.label(e) + " -> " + h.codomain.label(h.map[e]) + "\n";
  return out;
}

std::string table_text(const Groupoid& g) {
  return render_table(g.labels(), [&](Elem a, Elem b) { return g.compose(a, b); });
}

/// Name of a group up to isomorphism when it has order at most 8.
std::string group_class(const Groupoid& g) {
  static const std::vector<NamedGroupoid> named = small_groups();
  for (const auto& n : named)
    if (n.groupoid.size() == g.size() && find_isomorphism(g, n.groupoid)) return n.name;
  return "group of order " + std::to_string(g.size());
}

std::string groupoid_class(const Groupoid& g) {
  if (is_group(g)) return group_class(g);
  std::vector<std::string> iso;
  for (Elem e : g.identities()) iso.push_back(group_class(isotropy_group(g, e)));
  std::string out = std::to_string(g.identities().size()) + " objects, " +
                    std::to_string(g.size()) + " elements, isotropy ";
  return out + braces(iso);
}

json factors_json(const SubnormalSeries& s) {
  json out = json::array();
  for (const auto& f : s.factors)
    out.push_back({{"size", f.size()}, {"class", groupoid_class(f)}, {"simple", is_simple(f)}});
  return out;
}

std::string factors_text(const SubnormalSeries& s) {
  std::string out = "factors:\n";
  for (std::size_t i = 0; i < s.factors.size(); ++i)
    out += "  " + std::to_string(i) + "/" + std::to_string(i + 1) + ": " +
           groupoid_class(s.factors[i]) + "\n";
  return out;
}

json chain_json(const SubnormalSeries& s) {
  json out = json::array();
  for (const auto& t : s.chain) out.push_back(labels_of(s.groupoid, t));
  return out;
}

std::string chain_text(const SubnormalSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.chain.size(); ++i)
    out += "  " + std::to_string(i) + ": " + braces(labels_of(s.groupoid, s.chain[i])) + "\n";
  return out;
}

Outcome failed(std::string reason, std::vector<std::string> witness) {
  Outcome o;
  o.ok = false;
  o.reason = std::move(reason);
  o.witness = std::move(witness);
  return o;
}

std::vector<std::string> witness_of(const Error& e) {
  if (e.witness().empty()) return {};
  return {e.witness()};
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_validate(const std::string& file) {
  Document d = [&] {
    try {
      return load_document(file);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::AxiomViolation:
        case ErrorKind::NotAGroup:
        case ErrorKind::NotAssociative:
        case ErrorKind::StarViolation:
        case ErrorKind::NonCommutingIdempotents:
          throw;
        default:
          throw InputError{e};
      }
    }
  }();
  Outcome o;
  o.result["kind"] = to_string(d.kind);
  std::string text = std::string(to_string(d.kind)) + " document is valid";
  if (std::holds_alternative<Groupoid>(d.payload)) {
    const Groupoid& g = d.groupoid();
    bound_check(g);
    o.result["size"] = g.size();
    o.result["identities"] = g.identities().size();
    text += ": " + std::to_string(g.size()) + " elements, " +
            std::to_string(g.identities().size()) + " identities";
  }
  if (auto a = std::get_if<ActionDoc>(&d.payload)) {
    if (!a->exel) reading([&] { return to_partial_action(*a); });
    o.result["size"] = a->set.size();
  }
  o.human = text + "\n";
  return o;
}

Outcome cmd_info(const std::string& file) {
  const Groupoid g = load_groupoid(file);
  Outcome o;
  const auto st = abelian_status(g);
  json iso = json::object();
  std::string iso_text;
  for (Elem e : g.identities()) {
    iso[g.label(e)] = g.isotropy(e).size();
    iso_text += "  G_" + g.label(e) + ": " + group_class(isotropy_group(g, e)) + "\n";
  }
  // Connected components through the anchor.
  std::vector<Elem> comp(g.size());
  for (Elem i = 0; i < g.size(); ++i) comp[i] = i;
  std::function<Elem(Elem)> root = [&](Elem x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
  for (Elem a = 0; a < g.size(); ++a) comp[root(g.source(a))] = root(g.target(a));
  std::set<Elem> roots;
  for (Elem e : g.identities()) roots.insert(root(e));
  o.result = {{"size", g.size()},
              {"identities", labels_of(g, g.identities())},
              {"components", roots.size()},
              {"isotropy", iso},
              {"iso_size", iso_set(g).size()},
              {"group", is_group(g)},
              {"totally_abelian", st.totally_abelian},
              {"isotropy_abelian", st.isotropy_abelian}};
  std::ostringstream h;
  h << (is_group(g) ? "group" : "groupoid") << " with " << g.size() << " elements, "
    << g.identities().size() << " identities, " << roots.size() << " components\n";
  h << "identities: " << braces(labels_of(g, g.identities())) << "\n";
  h << "isotropy groups:\n" << iso_text;
  h << "abelian: " << (st.isotropy_abelian ? "isotropy abelian" : "not isotropy abelian")
    << (st.totally_abelian ? ", totally abelian" : "") << "\n";
  h << table_text(g);
  o.human = h.str();
  return o;
}

Outcome cmd_sub_enumerate(const std::string& file, bool wide, bool normal) {
  const Groupoid g = load_groupoid(file);
  const SubFilter f = normal ? SubFilter::Normal : wide ? SubFilter::Wide : SubFilter::All;
  const auto subs = enumerate_subgroupoids(g, f, opts.max_size.value_or(kDefaultEnumerationBound));
  Outcome o;
  json list = json::array();
  std::string text;
  for (const auto& s : subs) {
    list.push_back(s.labels());
    text += "  " + braces(s.labels()) + (s.wide() ? " wide" : "") + (s.normal() ? " normal" : "") + "\n";
  }
  o.result = {{"filter", normal ? "normal" : wide ? "wide" : "all"},
              {"count", subs.size()},
              {"subgroupoids", list}};
  o.human = std::to_string(subs.size()) + " subgroupoids\n" + text;
  return o;
}

Outcome cmd_sub_check(const std::string& file, const std::string& members) {
  const Groupoid g = load_groupoid(file);
  const ElemSet s = resolve(g, split_members(members));
  const auto c = is_subgroupoid(g, s);
  Outcome o;
  o.result = {{"subgroupoid", c.subgroupoid}, {"wide", c.wide}};
  if (!c.subgroupoid) {
    Outcome f = failed(c.reason, labels_of(g, c.witness));
    f.result = o.result;
    f.human = "not a subgroupoid\n";
    return f;
  }
  o.human = std::string("subgroupoid") + (c.wide ? ", wide" : ", not wide") + "\n";
  if (!c.wide) o.result["missing_identity"] = labels_of(g, c.witness);
  return o;
}

Outcome cmd_normal_check(const std::string& file, const std::string& members) {
  const Groupoid g = load_groupoid(file);
  const ElemSet s = resolve(g, split_members(members));
  const auto c = is_subgroupoid(g, s);
  if (!c.subgroupoid) {
    Outcome f = failed("not a subgroupoid: " + c.reason, labels_of(g, c.witness));
    f.result = {{"subgroupoid", false}, {"normal", false}};
    f.human = "not a subgroupoid\n";
    return f;
  }
  const auto r = is_normal(g, s);
  Outcome o;
  o.result = {{"subgroupoid", true},
              {"wide", c.wide},
              {"normal", r.normal},
              {"via_definition", r.via_definition},
              {"via_characterization", r.via_characterization},
              {"quotient_admissible", quotient_admissible_in(g, g.all(), s)}};
  if (r.normal) {
    o.human = "normal";
    o.human += quotient_admissible_in(g, g.all(), s) ? ", inside Iso\n" : ", not inside Iso\n";
    return o;
  }
  o.ok = false;
  o.witness = labels_of(g, r.witness);
  if (r.witness.size() == 2) {
    const Elem a = r.witness[0], x = r.witness[1];
    const Elem conj = g.mul(g.mul(g.inverse(a), x), a);
    o.witness.push_back(g.label(conj));
    o.reason = g.label(a) + "^-1 " + g.label(x) + " " + g.label(a) + " = " + g.label(conj) +
               " lies outside the subgroupoid";
  } else if (r.witness.size() == 1) {
    o.reason = "the conjugate by " + g.label(r.witness[0]) + " is empty";
  } else {
    o.reason = "not wide";
  }
  o.human = "not normal\n";
  return o;
}

Outcome cmd_quotient(const std::string& file, const std::string& by) {
  const Groupoid g = load_groupoid(file);
  const ElemSet n = load_subset(g, by);
  const Quotient q = quotient(g, n);
  Outcome o;
  json cosets = json::array();
  std::string text = "cosets:\n";
  for (std::size_t i = 0; i < q.cosets.classes.size(); ++i) {
    const auto members = labels_of(g, q.cosets.classes[i]);
    cosets.push_back({{"label", q.groupoid.label(static_cast<Elem>(i))}, {"members", members}});
    text += "  " + q.groupoid.label(static_cast<Elem>(i)) + " = " + braces(members) + "\n";
  }
  const bool iso_input = q.groupoid.size() == g.size() && find_isomorphism(q.groupoid, g).has_value();
  o.result = {{"size", q.groupoid.size()},
              {"cosets", cosets},
              {"quotient", to_json(groupoid_document(q.groupoid))},
              {"isomorphic_to_input", iso_input}};
  o.human = "quotient with " + std::to_string(q.groupoid.size()) + " elements" +
            (iso_input ? " (isomorphic to the input)" : "") + "\n" + text + table_text(q.groupoid);
  return o;
}

Hom load_hom(const Groupoid& dom, const Groupoid& cod, const std::string& file) {
  Document d = load(file);
  const auto& m = reading([&] { return d.hom().map; });
  std::vector<std::pair<std::string, std::string>> pairs(m.begin(), m.end());
  // Only the homomorphism property itself counts as a failing property.
  try {
    return check_hom_labels(dom, cod, pairs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAHomomorphism) throw;
    throw InputError{e};
  }
}

Outcome cmd_hom_check(const std::string& dom_file, const std::string& cod_file,
                      const std::string& map_file) {
  const Groupoid dom = load_groupoid(dom_file), cod = load_groupoid(cod_file);
  const Hom h = load_hom(dom, cod, map_file);
  const auto img = image(h);
  Outcome o;
  o.result = {{"hom", true},
              {"strong", h.strong},
              {"injective", h.injective},
              {"surjective", h.surjective},
              {"bijective", h.bijective()},
              {"kernel", kernel(h).labels()},
              {"image", labels_of(cod, img.set)},
              {"image_is_subgroupoid", img.is_subgroupoid}};
  o.human = std::string("homomorphism") + (h.strong ? ", strong" : "") +
            (h.injective ? ", injective" : "") + (h.surjective ? ", surjective" : "") + "\n" +
            "kernel: " + braces(kernel(h).labels()) + "\n" + "image: " +
            braces(labels_of(cod, img.set)) + "\n";
  return o;
}

Outcome cmd_iso(const std::string& a_file, const std::string& b_file) {
  const Groupoid a = load_groupoid(a_file), b = load_groupoid(b_file);
  const auto h = find_isomorphism(a, b);
  if (!h) {
    Outcome f = failed("no isomorphism exists", {});
    f.result = {{"isomorphic", false}};
    f.human = "not isomorphic\n";
    return f;
  }
  Outcome o;
  o.result = {{"isomorphic", true}, {"map", map_json(*h)}};
  o.human = "isomorphic\n" + map_text(*h);
  return o;
}

Outcome cmd_first(const std::string& dom_file, const std::string& cod_file,
                  const std::string& map_file) {
  const Groupoid dom = load_groupoid(dom_file), cod = load_groupoid(cod_file);
  const Hom phi = load_hom(dom, cod, map_file);
  const FirstIso f = first_iso(phi);
  bool factors = true;
  for (Elem e = 0; e < dom.size(); ++e)
    factors = factors && f.iso.map[coset_index(f.quotient, e)] == phi.map[e];
  Outcome o;
  o.result = {{"kernel", kernel(phi).labels()},
              {"quotient_size", f.quotient.groupoid.size()},
              {"iso", map_json(f.iso)},
              {"factorization", factors}};
  o.ok = factors;
  o.human = "G/Ker(phi) has " + std::to_string(f.quotient.groupoid.size()) +
            " elements and maps isomorphically onto the codomain\n" + map_text(f.iso);
  return o;
}

Outcome cmd_second(const std::string& file, const std::string& m_file, const std::string& n_file) {
  const Groupoid g = load_groupoid(file);
  const ElemSet m = load_subset(g, m_file), n = load_subset(g, n_file);
  const SecondIso s = second_iso(g, m, n);
  Outcome o;
  o.result = {{"mn", labels_of(g, s.mn)},
              {"lhs_size", s.lhs.groupoid.size()},
              {"rhs_size", s.rhs.groupoid.size()},
              {"iso", map_json(s.iso)}};
  o.human = "M/(M∩N) ≅ MN/N with MN = " + braces(labels_of(g, s.mn)) + "\n" + map_text(s.iso);
  return o;
}

Outcome cmd_third(const std::string& file, const std::string& h_file, const std::string& k_file) {
  const Groupoid g = load_groupoid(file);
  const ElemSet h = load_subset(g, h_file), k = load_subset(g, k_file);
  const ThirdIso t = third_iso(g, h, k);
  Outcome o;
  o.result = {{"outer_size", t.outer.groupoid.size()},
              {"g_by_h_size", t.g_by_h.groupoid.size()},
              {"iso", map_json(t.iso)}};
  o.human = "(G/K)/(H/K) ≅ G/H\n" + map_text(t.iso);
  return o;
}

bool is_composition(const SubnormalSeries& s) {
  if (!s.ends_at_identities()) return false;
  return std::all_of(s.factors.begin(), s.factors.end(), [](const Groupoid& f) { return is_simple(f); });
}

Outcome series_outcome(const SubnormalSeries& s, const std::string& title) {
  Outcome o;
  o.result = {{"series", chain_json(s)},
              {"length", s.length()},
              {"normal_series", s.normal_series},
              {"ends_at_identities", s.ends_at_identities()},
              {"composition", is_composition(s)},
              {"factors", factors_json(s)}};
  o.human = title + " of length " + std::to_string(s.length()) + "\n" + chain_text(s) + factors_text(s);
  return o;
}

Outcome cmd_series_validate(const std::string& file, const std::string& series_file) {
  const Groupoid g = load_groupoid(file);
  return series_outcome(validate_series(g, load_chain(g, series_file)), "subnormal series");
}

Outcome cmd_series_composition(const std::string& file) {
  const Groupoid g = load_groupoid(file);
  return series_outcome(composition_series(g), "composition series");
}

SubnormalSeries input_series(const Groupoid& g, const std::string& file) {
  auto chain = load_chain(g, file);
  return reading([&] { return validate_series(g, chain); });
}

Outcome cmd_series_refine(const std::string& file, const std::string& series_file,
                          std::size_t at, const std::string& by) {
  const Groupoid g = load_groupoid(file);
  const SubnormalSeries s = input_series(g, series_file);
  const ElemSet n = load_subset(g, by);
  const SubnormalSeries r = [&] {
    try {
      return one_step_refinement(s, at, n);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BadPosition) throw InputError{e};
      throw;
    }
  }();
  return series_outcome(r, "refined series");
}

Outcome cmd_series_equivalent(const std::string& file, const std::string& a, const std::string& b) {
  const Groupoid g = load_groupoid(file);
  const auto s = input_series(g, a), t = input_series(g, b);
  const auto eq = series_equivalent(s, t);
  Outcome o;
  json matching = json::array();
  for (auto [i, j] : eq.matching) matching.push_back({i, j});
  o.result = {{"equivalent", eq.equivalent}, {"matching", matching}};
  o.ok = eq.equivalent;
  if (!o.ok) o.reason = "the nontrivial factors cannot be matched up to isomorphism";
  o.human = eq.equivalent ? "equivalent\n" : "not equivalent\n";
  return o;
}

Outcome cmd_jordan_holder(const std::string& file) {
  const Groupoid g = load_groupoid(file);
  const auto all = all_composition_series(g, opts.max_size.value_or(16));
  SeriesEquivalence worst{true, {}};
  std::size_t bad_i = 0, bad_j = 0;
  for (std::size_t i = 0; i < all.size() && worst.equivalent; ++i)
    for (std::size_t j = i + 1; j < all.size() && worst.equivalent; ++j)
      if (!series_equivalent(all[i], all[j]).equivalent) {
        worst.equivalent = false;
        bad_i = i;
        bad_j = j;
      }
  Outcome o;
  json list = json::array();
  std::string text;
  for (const auto& s : all) {
    list.push_back({{"series", chain_json(s)}, {"factors", factors_json(s)}});
    std::vector<std::string> names;
    for (const auto& f : s.factors) names.push_back(groupoid_class(f));
    text += "  " + braces(names) + "\n";
  }
  o.result = {{"series_found", all.size()}, {"all_equivalent", worst.equivalent}, {"series", list}};
  o.ok = worst.equivalent;
  if (!o.ok) {
    o.reason = "two composition series are not equivalent";
    o.witness = {std::to_string(bad_i), std::to_string(bad_j)};
  }
  o.human = std::to_string(all.size()) + " composition series, " +
            (worst.equivalent ? "all equivalent" : "not all equivalent") + "\nfactors:\n" + text;
  return o;
}

Outcome cmd_zassenhaus(const std::string& file, const std::string& as, const std::string& a,
                       const std::string& bs, const std::string& b) {
  const Groupoid g = load_groupoid(file);
  const auto z = zassenhaus(g, load_subset(g, as), load_subset(g, a), load_subset(g, bs),
                            load_subset(g, b));
  Outcome o;
  o.result = {{"upper_a", labels_of(g, z.upper_a)},
              {"lower_a", labels_of(g, z.lower_a)},
              {"upper_b", labels_of(g, z.upper_b)},
              {"lower_b", labels_of(g, z.lower_b)},
              {"middle", labels_of(g, z.middle)},
              {"lhs_size", z.lhs.groupoid.size()},
              {"rhs_size", z.rhs.groupoid.size()},
              {"iso", map_json(z.iso)}};
  o.human = "A*(A∩B)/A*(A∩B*) ≅ B*(A∩B)/B*(A*∩B), " + std::to_string(z.lhs.groupoid.size()) +
            " elements\n" + map_text(z.iso);
  return o;
}

Outcome cmd_schreier(const std::string& file, const std::string& a, const std::string& b) {
  const Groupoid g = load_groupoid(file);
  const auto r = schreier_refine(input_series(g, a), input_series(g, b));
  Outcome o;
  o.result = {{"s_refined", chain_json(r.s_refined)},
              {"t_refined", chain_json(r.t_refined)},
              {"equivalent", r.certificate.equivalent}};
  o.ok = r.certificate.equivalent;
  if (!o.ok) o.reason = "the refinements are not equivalent";
  o.human = "refinement of the first series:\n" + chain_text(r.s_refined) +
            "refinement of the second series:\n" + chain_text(r.t_refined) +
            (r.certificate.equivalent ? "equivalent\n" : "not equivalent\n");
  return o;
}

ExelSemigroup exel_of(const Groupoid& group) {
  if (opts.max_size && group.size() > *opts.max_size)
    fail(ErrorKind::TooLarge, "group above --max-size", std::to_string(*opts.max_size));
  return exel_semigroup(group);
}

Outcome cmd_exel_build(const std::string& file) {
  const ExelSemigroup e = exel_of(load_group(file));
  const auto& s = e.semigroup;
  const auto rep = check_inverse_semigroup(s.size(), s.table(), s.star_map());
  Outcome o;
  o.result = {{"size", s.size()},
              {"elements", s.labels()},
              {"inverse_semigroup", rep.ok()},
              {"semigroup", to_json(semigroup_document(s))}};
  o.ok = rep.ok();
  o.human = "E(G) has " + std::to_string(s.size()) + " elements\n" +
            render_table(s.labels(), [&](Elem a, Elem b) { return std::optional(s.mul(a, b)); });
  return o;
}

Outcome cmd_exel_normal_form(const std::string& file, const std::string& word_text) {
  const Groupoid group = load_group(file);
  const ExelSemigroup e = exel_of(group);
  std::vector<Elem> word;
  for (const auto& l : split_members(word_text)) word.push_back(reading([&] { return group.at(l); }));
  const auto tokens = reading([&] { return exel_rewrite(group, word); });
  const auto nf = exel_normal_form(group, word);
  const bool agrees = nf == exel_fold(e, word);
  json toks = json::array();
  std::string text;
  for (const auto& t : tokens) {
    const std::string s = t.kind == ExelToken::Gen ? "[" + group.label(t.g) + "]" : "γ_" + group.label(t.g);
    toks.push_back(s);
    text += s;
  }
  Outcome o;
  o.result = {{"tokens", toks}, {"element", e.label(nf)}, {"fold_agrees", agrees}};
  o.ok = agrees;
  if (!agrees) o.reason = "rewriting and pair-form products disagree";
  o.human = text + " = " + e.label(nf) + "\n";
  return o;
}

Outcome cmd_exel_groupoid(const std::string& file) {
  const ExelSemigroup e = exel_of(load_group(file));
  const Groupoid g = exel_groupoid(e);
  Outcome o;
  o.result = {{"size", g.size()},
              {"identities", labels_of(g, g.identities())},
              {"groupoid", to_json(groupoid_document(g))}};
  o.human = "restricted-product groupoid of E(G): " + std::to_string(g.size()) + " elements, " +
            std::to_string(g.identities().size()) + " identities\n" + table_text(g);
  return o;
}

ActionDoc load_action(const std::string& file) {
  Document d = load(file);
  return reading([&] { return d.action(); });
}

std::string action_text(const Document& d) { return emit_document(d, EmitMode::Human); }

Outcome cmd_paction_check(const std::string& file) {
  const ActionDoc a = load_action(file);
  const PartialAction raw = reading([&] { return to_partial_action(a); });
  const PartialAction p = validate_partial_action(raw.group, raw.points, raw.maps);
  Outcome o;
  json pieces = json::object();
  for (Elem g = 0; g < p.group.size(); ++g) {
    std::vector<std::string> pts;
    for (Elem x : p.piece(g).members()) pts.push_back(p.points[x]);
    pieces[p.group.label(g)] = pts;
  }
  o.result = {{"action", true}, {"pieces", pieces}};
  o.human = "partial action\n";
  return o;
}

Outcome cmd_paction_to_exel(const std::string& file) {
  const ActionDoc a = load_action(file);
  const PartialAction raw = reading([&] { return to_partial_action(a); });
  const PartialAction p = validate_partial_action(raw.group, raw.points, raw.maps);
  const ExelSemigroup e = exel_of(p.group);
  const Document d = action_document(e, partial_to_semigroup_action(e, p));
  Outcome o;
  o.result = {{"action", to_json(d)}};
  o.human = action_text(d);
  return o;
}

Outcome cmd_paction_from_exel(const std::string& file) {
  const ActionDoc a = load_action(file);
  const ExelSemigroup e = exel_of(a.group);
  const SemigroupAction s = reading([&] { return to_semigroup_action(a, e); });
  const Document d = action_document(semigroup_action_to_partial(e, s));
  Outcome o;
  o.result = {{"action", to_json(d)}};
  o.human = action_text(d);
  return o;
}

Outcome cmd_paction_roundtrip(const std::string& file, std::size_t points) {
  const Groupoid group = load_group(file);
  const auto r = correspondence_roundtrip(group, points, opts.max_size.value_or(kActionGroupBound),
                                          kActionPointBound);
  Outcome o;
  o.result = {{"group_order", group.size()},
              {"points", points},
              {"partial_actions", r.partial_actions},
              {"semigroup_actions", r.semigroup_actions},
              {"inductive_homs", r.inductive_homs},
              {"global_actions", r.global_actions},
              {"ordinary_homs", r.ordinary_homs},
              {"plain_global_actions", r.plain_global_actions},
              {"counts_match", r.counts_match},
              {"maps_inverse", r.maps_inverse}};
  o.ok = r.counts_match && r.maps_inverse;
  if (!o.ok) {
    o.reason = r.counts_match ? "conversions are not mutually inverse" : "counts differ";
    o.witness = r.failures;
  }
  std::ostringstream h;
  h << "partial actions:          " << r.partial_actions << "\n"
    << "unital E(G)-actions:      " << r.semigroup_actions << "\n"
    << "inductive homs:           " << r.inductive_homs << "\n"
    << "inductive global actions: " << r.global_actions << "\n"
    << "(all unital homs:         " << r.ordinary_homs << ")\n"
    << "(all global actions:      " << r.plain_global_actions << ")\n"
    << (o.ok ? "correspondence holds\n" : "correspondence fails\n");
  o.human = h.str();
  return o;
}

Outcome cmd_corpus(std::size_t count) {
  const auto tables = mutated_tables(opts.seed, count);
  std::size_t agree = 0, valid = 0;
  json disagreements = json::array();
  for (const auto& t : tables) {
    const auto r = check_axioms(t.table);
    if (r.identity_system_holds() == r.inverse_map_system_holds()) ++agree;
    else disagreements.push_back(t.name);
    if (r.overall()) ++valid;
  }
  Outcome o;
  o.result = {{"seed", opts.seed},
              {"tables", tables.size()},
              {"agree", agree},
              {"valid", valid},
              {"disagreements", disagreements}};
  o.ok = agree == tables.size();
  if (!o.ok) {
    o.reason = "the axiom systems disagree";
    for (const auto& d : disagreements) o.witness.push_back(d.get<std::string>());
  }
  o.human = std::to_string(tables.size()) + " mutated tables, " + std::to_string(valid) +
            " groupoids, verdicts agree on " + std::to_string(agree) + "\n";
  return o;
}

// ---------------------------------------------------------------------------

struct Command {
  std::function<Outcome()> run;
  std::string name;
  std::vector<ErrorKind> property_kinds;
};

void emit(const Outcome& o, const std::string& name, std::ostream& out) {
  if (opts.json) {
    json env = {{"command", name}, {"ok", o.ok}, {"result", o.result}};
    if (!o.ok) {
      env["reason"] = o.reason;
      env["witness"] = o.witness;
    }
    out << env.dump() << "\n";
    return;
  }
  out << o.human;
  if (!o.ok) {
    out << "fails: " << o.reason << "\n";
    if (!o.witness.empty()) out << "witness: " << braces(o.witness) << "\n";
  }
}

int report(const Error& e, std::ostream& err) {
  err << "error [" << to_string(e.kind()) << "]: " << e.what();
  if (!e.witness().empty()) err << " (" << e.witness() << ")";
  err << "\n";
  return e.kind() == ErrorKind::TooLarge ? kExitTooLarge : kExitInvalidInput;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  opts = Options{};
  CLI::App app{"Finite groupoids, their subgroupoids, quotients and series, the Exel semigroup "
               "and partial actions"};
  app.name("grpd");
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t max_size = 0;
  app.add_flag("--json", opts.json, "Machine-readable output");
  auto* max_opt = app.add_option("--max-size", max_size, "Size bound for enumerations");
  app.add_option("--seed", opts.seed, "Seed for randomized corpus commands");

  Command chosen;
  auto on = [&](CLI::App* sub, std::string name, std::vector<ErrorKind> kinds,
                std::function<Outcome()> fn) {
    sub->fallthrough();
    sub->callback([&chosen, name, kinds, fn] { chosen = {fn, name, kinds}; });
  };
  auto group_of = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->require_subcommand(1);
    s->fallthrough();
    return s;
  };

  std::string f1, f2, f3, f4, f5, members, by, word;
  bool wide = false, normal = false;
  std::size_t at = 0, count = 1000, points = 2;

  auto* validate = app.add_subcommand("validate", "Parse and validate a document");
  validate->add_option("file", f1)->required();
  on(validate, "validate", {ErrorKind::AxiomViolation, ErrorKind::NotAGroup, ErrorKind::NotAssociative,
                            ErrorKind::StarViolation, ErrorKind::NonCommutingIdempotents},
     [&] { return cmd_validate(f1); });

  auto* info = app.add_subcommand("info", "Summarize a groupoid");
  info->add_option("file", f1)->required();
  on(info, "info", {}, [&] { return cmd_info(f1); });

  auto* sub = group_of(&app, "sub", "Subgroupoids");
  auto* sub_enum = sub->add_subcommand("enumerate", "List every subgroupoid");
  sub_enum->add_flag("--wide", wide);
  sub_enum->add_flag("--normal", normal);
  sub_enum->add_option("file", f1)->required();
  on(sub_enum, "sub enumerate", {}, [&] { return cmd_sub_enumerate(f1, wide, normal); });
  auto* sub_check = sub->add_subcommand("check", "Check a subset");
  sub_check->add_option("file", f1)->required();
  sub_check->add_option("--members", members)->required();
  on(sub_check, "sub check", {}, [&] { return cmd_sub_check(f1, members); });

  auto* normal_cmd = group_of(&app, "normal", "Normality");
  auto* normal_check = normal_cmd->add_subcommand("check", "Check normality of a subset");
  normal_check->add_option("file", f1)->required();
  normal_check->add_option("--members", members)->required();
  on(normal_check, "normal check", {}, [&] { return cmd_normal_check(f1, members); });

  auto* quot = app.add_subcommand("quotient", "Quotient by a normal subgroupoid");
  quot->add_option("file", f1)->required();
  quot->add_option("--by", by, "Subset document")->required();
  on(quot, "quotient",
     {ErrorKind::NotNormal, ErrorKind::NotWide, ErrorKind::QuotientUndefined, ErrorKind::NotASubgroupoid},
     [&] { return cmd_quotient(f1, by); });

  auto* hom = group_of(&app, "hom", "Homomorphisms");
  auto* hom_check = hom->add_subcommand("check", "Check and classify a map");
  hom_check->add_option("domain", f1)->required();
  hom_check->add_option("codomain", f2)->required();
  hom_check->add_option("map", f3)->required();
  on(hom_check, "hom check", {ErrorKind::NotAHomomorphism}, [&] { return cmd_hom_check(f1, f2, f3); });

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("first", f1)->required();
  iso->add_option("second", f2)->required();
  on(iso, "iso", {}, [&] { return cmd_iso(f1, f2); });

  auto* theorem = group_of(&app, "iso-theorem", "Isomorphism theorems");
  auto* first = theorem->add_subcommand("first", "G/Ker(phi) ≅ codomain");
  first->add_option("domain", f1)->required();
  first->add_option("codomain", f2)->required();
  first->add_option("map", f3)->required();
  on(first, "iso-theorem first",
     {ErrorKind::NotStrong, ErrorKind::NotSurjective, ErrorKind::NotAHomomorphism},
     [&] { return cmd_first(f1, f2, f3); });
  auto* second = theorem->add_subcommand("second", "M/(M∩N) ≅ MN/N");
  second->add_option("file", f1)->required();
  second->add_option("M", f2)->required();
  second->add_option("N", f3)->required();
  on(second, "iso-theorem second",
     {ErrorKind::NotWide, ErrorKind::NotNormal, ErrorKind::QuotientUndefined, ErrorKind::NotASubgroupoid},
     [&] { return cmd_second(f1, f2, f3); });
  auto* third = theorem->add_subcommand("third", "(G/K)/(H/K) ≅ G/H");
  third->add_option("file", f1)->required();
  third->add_option("H", f2)->required();
  third->add_option("K", f3)->required();
  on(third, "iso-theorem third",
     {ErrorKind::NotWide, ErrorKind::NotNormal, ErrorKind::NotNested, ErrorKind::QuotientUndefined,
      ErrorKind::NotASubgroupoid},
     [&] { return cmd_third(f1, f2, f3); });

  auto* series = group_of(&app, "series", "Subnormal series");
  auto* s_validate = series->add_subcommand("validate", "Validate a series");
  s_validate->add_option("file", f1)->required();
  s_validate->add_option("series", f2)->required();
  on(s_validate, "series validate",
     {ErrorKind::NotNested, ErrorKind::NotASubgroupoid, ErrorKind::NotNormalAtStep,
      ErrorKind::QuotientUndefined},
     [&] { return cmd_series_validate(f1, f2); });
  auto* s_comp = series->add_subcommand("composition", "Compute a composition series");
  s_comp->add_option("file", f1)->required();
  on(s_comp, "series composition", {}, [&] { return cmd_series_composition(f1); });
  auto* s_refine = series->add_subcommand("refine", "Insert one term into a series");
  s_refine->add_option("file", f1)->required();
  s_refine->add_option("series", f2)->required();
  s_refine->add_option("--at", at, "Insert after this position")->required();
  s_refine->add_option("--by", by, "Subset document")->required();
  on(s_refine, "series refine", {ErrorKind::NotNormal, ErrorKind::QuotientUndefined},
     [&] { return cmd_series_refine(f1, f2, at, by); });
  auto* s_eq = series->add_subcommand("equivalent", "Compare two series");
  s_eq->add_option("file", f1)->required();
  s_eq->add_option("first", f2)->required();
  s_eq->add_option("second", f3)->required();
  on(s_eq, "series equivalent", {}, [&] { return cmd_series_equivalent(f1, f2, f3); });
  auto* s_jh = series->add_subcommand("jordan-holder", "Compare every composition series");
  s_jh->add_option("file", f1)->required();
  on(s_jh, "series jordan-holder", {}, [&] { return cmd_jordan_holder(f1); });
  auto* s_z = series->add_subcommand("zassenhaus", "Butterfly lemma for A* ⊴ A, B* ⊴ B");
  s_z->add_option("file", f1)->required();
  s_z->add_option("A_star", f2)->required();
  s_z->add_option("A", f3)->required();
  s_z->add_option("B_star", f4)->required();
  s_z->add_option("B", f5)->required();
  on(s_z, "series zassenhaus",
     {ErrorKind::NotWide, ErrorKind::NotNormal, ErrorKind::QuotientUndefined, ErrorKind::NotASubgroupoid},
     [&] { return cmd_zassenhaus(f1, f2, f3, f4, f5); });
  auto* s_sch = series->add_subcommand("schreier", "Equivalent refinements of two series");
  s_sch->add_option("file", f1)->required();
  s_sch->add_option("first", f2)->required();
  s_sch->add_option("second", f3)->required();
  on(s_sch, "series schreier", {}, [&] { return cmd_schreier(f1, f2, f3); });

  auto* exel = group_of(&app, "exel", "The Exel semigroup of a group");
  auto* e_build = exel->add_subcommand("build", "Materialize E(G)");
  e_build->add_option("group", f1)->required();
  on(e_build, "exel build", {}, [&] { return cmd_exel_build(f1); });
  auto* e_nf = exel->add_subcommand("normal-form", "Normal form of a word of generators");
  e_nf->add_option("group", f1)->required();
  e_nf->add_option("--word", word, "Comma separated group elements")->required();
  on(e_nf, "exel normal-form", {}, [&] { return cmd_exel_normal_form(f1, word); });
  auto* e_g = exel->add_subcommand("groupoid", "Restricted-product groupoid of E(G)");
  e_g->add_option("group", f1)->required();
  on(e_g, "exel groupoid", {}, [&] { return cmd_exel_groupoid(f1); });

  auto* pa = group_of(&app, "paction", "Partial actions");
  auto* pa_check = pa->add_subcommand("check", "Check the partial-action axioms");
  pa_check->add_option("file", f1)->required();
  on(pa_check, "paction check", {ErrorKind::AxiomViolation}, [&] { return cmd_paction_check(f1); });
  auto* pa_to = pa->add_subcommand("to-exel", "The induced E(G)-action");
  pa_to->add_option("file", f1)->required();
  on(pa_to, "paction to-exel", {ErrorKind::AxiomViolation}, [&] { return cmd_paction_to_exel(f1); });
  auto* pa_from = pa->add_subcommand("from-exel", "The partial action of an E(G)-action");
  pa_from->add_option("file", f1)->required();
  on(pa_from, "paction from-exel",
     {ErrorKind::NotUnital, ErrorKind::NotAHomomorphism, ErrorKind::AxiomViolation},
     [&] { return cmd_paction_from_exel(f1); });
  auto* pa_rt = pa->add_subcommand("roundtrip", "Count and convert all actions on n points");
  pa_rt->add_option("group", f1)->required();
  pa_rt->add_option("--points", points, "Number of points")->check(CLI::Range(1, 3));
  on(pa_rt, "paction roundtrip", {}, [&] { return cmd_paction_roundtrip(f1, points); });

  auto* corpus = app.add_subcommand("corpus", "Compare the axiom systems on seeded mutated tables");
  corpus->add_option("--count", count, "Number of tables");
  on(corpus, "corpus", {}, [&] { return cmd_corpus(count); });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Help on a subcommand.
    if (e.get_exit_code() == 0) return kExitOk;
    err << "error [Usage]: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (max_opt->count()) opts.max_size = max_size;
  if (!chosen.run) {
    err << "error [Usage]: no command given\n";
    return kExitInvalidInput;
  }

  try {
    Outcome o = [&] {
      try {
        return chosen.run();
      } catch (const Error& e) {
        const auto& k = chosen.property_kinds;
        if (std::find(k.begin(), k.end(), e.kind()) == k.end()) throw;
        Outcome f = failed(e.what(), witness_of(e));
        f.result = {{"error", to_string(e.kind())}};
        f.human = std::string(to_string(e.kind())) + "\n";
        return f;
      }
    }();
    emit(o, chosen.name, out);
    return o.ok ? kExitOk : kExitPropertyFails;
  } catch (const InputError& e) {
    return report(e.error, err);
  } catch (const Error& e) {
    return report(e, err);
  }
}

}  // namespace grpd
