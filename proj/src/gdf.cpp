#include "grpd/gdf.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "grpd/constructions.hpp"

namespace grpd {

using nlohmann::json;

std::string_view to_string(DocKind k) {
  switch (k) {
    case DocKind::Groupoid: return "groupoid";
    case DocKind::Group: return "group";
    case DocKind::Subset: return "subset";
    case DocKind::Hom: return "hom";
    case DocKind::Series: return "series";
    case DocKind::PartialAction: return "partial_action";
    case DocKind::InverseSemigroup: return "inverse_semigroup";
  }
  return "unknown";
}

namespace {

template <class T>
const T& payload_as(const Document& d, const char* what) {
  if (auto p = std::get_if<T>(&d.payload)) return *p;
  fail(ErrorKind::SchemaError, std::string("expected a ") + what + " document, got " +
                                   std::string(to_string(d.kind)),
       "/kind");
}

}  // namespace

const Groupoid& Document::groupoid() const { return payload_as<Groupoid>(*this, "groupoid"); }
const SubsetDoc& Document::subset() const { return payload_as<SubsetDoc>(*this, "subset"); }
const HomDoc& Document::hom() const { return payload_as<HomDoc>(*this, "hom"); }
const SeriesDoc& Document::series() const { return payload_as<SeriesDoc>(*this, "series"); }
const ActionDoc& Document::action() const { return payload_as<ActionDoc>(*this, "partial_action"); }
const SemigroupDoc& Document::semigroup() const {
  return payload_as<SemigroupDoc>(*this, "inverse_semigroup");
}

// ---------------------------------------------------------------------------
// Positions

std::string line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view t) : t_(t) {}

  std::optional<std::size_t> find(const std::vector<std::string>& path) {
    pos_ = 0;
    return value(path, 0);
  }

 private:
  void ws() {
    while (pos_ < t_.size() && (t_[pos_] == ' ' || t_[pos_] == '\n' || t_[pos_] == '\r' ||
                                t_[pos_] == '\t'))
      ++pos_;
  }
  bool at(char c) {
    ws();
    return pos_ < t_.size() && t_[pos_] == c;
  }
  std::string string() {
    std::string out;
    ++pos_;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\\' && pos_ + 1 < t_.size()) {
        ++pos_;
        switch (t_[pos_]) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'u': out += '?'; pos_ += 4; break;
          default: out += t_[pos_];
        }
      } else {
        out += t_[pos_];
      }
      ++pos_;
    }
    ++pos_;
    return out;
  }
  void skip() {
    ws();
    if (pos_ >= t_.size()) return;
    const char c = t_[pos_];
    if (c == '"') {
      string();
    } else if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      ++pos_;
      while (!at(close) && pos_ < t_.size()) {
        if (c == '{') {
          string();
          at(':');
          ++pos_;
        }
        skip();
        if (at(',')) ++pos_;
      }
      ++pos_;
    } else {
      while (pos_ < t_.size() && std::string_view(",}] \n\r\t").find(t_[pos_]) == std::string_view::npos)
        ++pos_;
    }
  }
  std::optional<std::size_t> value(const std::vector<std::string>& path, std::size_t depth) {
    ws();
    if (depth == path.size()) return pos_;
    if (pos_ >= t_.size()) return std::nullopt;
    if (t_[pos_] == '{') {
      ++pos_;
      while (!at('}') && pos_ < t_.size()) {
        if (!at('"')) return std::nullopt;
        const std::size_t key_at = pos_;
        const std::string key = string();
        if (!at(':')) return std::nullopt;
        ++pos_;
        if (key == path[depth]) {
          // A pointer ending at a key reports the key itself.
          if (depth + 1 == path.size()) return key_at;
          return value(path, depth + 1);
        }
        skip();
        if (at(',')) ++pos_;
      }
      return std::nullopt;
    }
    if (t_[pos_] == '[') {
      ++pos_;
      std::size_t index = 0;
      while (!at(']') && pos_ < t_.size()) {
        if (std::to_string(index) == path[depth]) return value(path, depth + 1);
        skip();
        if (at(',')) ++pos_;
        ++index;
      }
    }
    return std::nullopt;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

std::string escape_token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

}  // namespace

std::optional<std::size_t> locate_pointer(std::string_view text, std::string_view pointer) {
  std::vector<std::string> path;
  if (!pointer.empty()) {
    std::string token;
    for (std::size_t i = 1; i <= pointer.size(); ++i) {
      if (i == pointer.size() || pointer[i] == '/') {
        path.push_back(token);
        token.clear();
      } else if (pointer[i] == '~' && i + 1 < pointer.size()) {
        token += pointer[++i] == '1' ? '/' : '~';
      } else {
        token += pointer[i];
      }
    }
  }
  return Scanner(text).find(path);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void schema(const std::string& ptr, const std::string& msg) const {
    const std::string where = ptr.empty() ? "/" : ptr;
    std::string at;
    if (auto off = locate_pointer(text_, ptr)) at = " at " + line_column(text_, *off);
    fail(ErrorKind::SchemaError, msg + " (" + where + at + ")", where);
  }

  void only(const json& obj, const std::string& ptr, std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : obj.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        schema(ptr + "/" + escape_token(k), "unknown field '" + k + "'");
    }
  }

  const json& field(const json& obj, const std::string& ptr, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end()) schema(ptr, std::string("missing field '") + key + "'");
    return *it;
  }

  std::string str(const json& v, const std::string& ptr) const {
    if (!v.is_string()) schema(ptr, "expected a string");
    return v.get<std::string>();
  }

  const json& object(const json& v, const std::string& ptr) const {
    if (!v.is_object()) schema(ptr, "expected an object");
    return v;
  }

  const json& array(const json& v, const std::string& ptr) const {
    if (!v.is_array()) schema(ptr, "expected an array");
    return v;
  }

  std::vector<std::string> strings(const json& v, const std::string& ptr) const {
    std::vector<std::string> out;
    array(v, ptr);
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(str(v[i], ptr + "/" + std::to_string(i)));
    return out;
  }

  std::vector<std::vector<Elem>> square(const json& v, const std::string& ptr,
                                        const std::vector<std::string>& labels,
                                        const std::function<std::optional<Elem>(const std::string&)>& find) const {
    array(v, ptr);
    if (v.size() != labels.size()) schema(ptr, "table needs one row per element");
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string rp = ptr + "/" + std::to_string(i);
      auto row = strings(v[i], rp);
      if (row.size() != labels.size()) schema(rp, "row needs one entry per element");
      std::vector<Elem> r;
      for (std::size_t j = 0; j < row.size(); ++j) {
        auto e = find(row[j]);
        if (!e) fail(ErrorKind::UnknownLabel, "unknown label '" + row[j] + "' in table", row[j]);
        r.push_back(*e);
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }

  Document document(const json& v, const std::string& ptr) const {
    object(v, ptr);
    const std::string version = str(field(v, ptr, "version"), ptr + "/version");
    if (version != kGdfVersion) schema(ptr + "/version", "unsupported version '" + version + "'");
    const std::string kind = str(field(v, ptr, "kind"), ptr + "/kind");

    if (kind == "groupoid") {
      only(v, ptr, {"version", "kind", "elements", "products"});
      auto labels = strings(field(v, ptr, "elements"), ptr + "/elements");
      const std::string pp = ptr + "/products";
      const json& products = array(field(v, ptr, "products"), pp);
      std::vector<Triple> triples;
      for (std::size_t i = 0; i < products.size(); ++i) {
        const std::string tp = pp + "/" + std::to_string(i);
        auto t = strings(products[i], tp);
        if (t.size() != 3) schema(tp, "a product is [left, right, product]");
        triples.push_back({t[0], t[1], t[2]});
      }
      return {DocKind::Groupoid, build_from_table(std::move(labels), triples)};
    }
    if (kind == "group") {
      only(v, ptr, {"version", "kind", "elements", "table"});
      auto labels = strings(field(v, ptr, "elements"), ptr + "/elements");
      if (labels.empty()) fail(ErrorKind::EmptyStructure, "a group needs at least one element");
      PartialTable probe(labels);  // label checks
      auto rows = square(field(v, ptr, "table"), ptr + "/table", labels,
                         [&](const std::string& s) { return probe.find(s); });
      return {DocKind::Group, from_group(labels, rows)};
    }
    if (kind == "subset") {
      only(v, ptr, {"version", "kind", "members"});
      return {DocKind::Subset, SubsetDoc{strings(field(v, ptr, "members"), ptr + "/members")}};
    }
    if (kind == "hom") {
      only(v, ptr, {"version", "kind", "map"});
      const std::string mp = ptr + "/map";
      const json& m = object(field(v, ptr, "map"), mp);
      HomDoc h;
      for (const auto& [k, x] : m.items()) h.map[k] = str(x, mp + "/" + escape_token(k));
      return {DocKind::Hom, h};
    }
    if (kind == "series") {
      only(v, ptr, {"version", "kind", "chain"});
      const std::string cp = ptr + "/chain";
      const json& c = array(field(v, ptr, "chain"), cp);
      SeriesDoc s;
      for (std::size_t i = 0; i < c.size(); ++i)
        s.chain.push_back(strings(c[i], cp + "/" + std::to_string(i)));
      if (s.chain.empty()) schema(cp, "a series needs at least one term");
      return {DocKind::Series, s};
    }
    if (kind == "partial_action") {
      only(v, ptr, {"version", "kind", "group", "set", "maps", "acting"});
      Document inner = document(field(v, ptr, "group"), ptr + "/group");
      if (inner.kind != DocKind::Group) schema(ptr + "/group", "the acting structure must be a group");
      bool exel = false;
      if (v.contains("acting")) {
        const std::string a = str(v["acting"], ptr + "/acting");
        if (a != "group" && a != "exel") schema(ptr + "/acting", "acting is 'group' or 'exel'");
        exel = a == "exel";
      }
      auto set = strings(field(v, ptr, "set"), ptr + "/set");
      if (set.empty()) fail(ErrorKind::EmptyStructure, "the point set is empty");
      PartialTable probe(set);  // label checks
      const std::string mp = ptr + "/maps";
      const json& maps = object(field(v, ptr, "maps"), mp);
      ActionDoc a{inner.groupoid(), exel, set, {}};
      for (const auto& [k, m] : maps.items()) {
        const std::string kp = mp + "/" + escape_token(k);
        object(m, kp);
        auto& out = a.maps[k];
        for (const auto& [x, y] : m.items()) out[x] = str(y, kp + "/" + escape_token(x));
      }
      return {DocKind::PartialAction, std::move(a)};
    }
    if (kind == "inverse_semigroup") {
      only(v, ptr, {"version", "kind", "elements", "table", "star"});
      auto labels = strings(field(v, ptr, "elements"), ptr + "/elements");
      if (labels.empty()) fail(ErrorKind::EmptyStructure, "a semigroup needs at least one element");
      PartialTable probe(labels);
      auto rows = square(field(v, ptr, "table"), ptr + "/table", labels,
                         [&](const std::string& s) { return probe.find(s); });
      auto star_labels = strings(field(v, ptr, "star"), ptr + "/star");
      if (star_labels.size() != labels.size()) schema(ptr + "/star", "star needs one entry per element");
      std::vector<Elem> table, star;
      for (const auto& r : rows) table.insert(table.end(), r.begin(), r.end());
      for (const auto& s : star_labels) star.push_back(probe.at(s));
      return {DocKind::InverseSemigroup,
              SemigroupDoc{FiniteInverseSemigroup(labels, std::move(table), std::move(star))}};
    }
    schema(ptr + "/kind", "unknown kind '" + kind + "'");
  }

 private:
  std::string_view text_;
};

}  // namespace

Document parse_document(std::string_view text) {
  json v;
  try {
    v = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    const std::string lc = line_column(text, at);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    fail(ErrorKind::SyntaxError, "malformed document at " + lc + ": " + msg, lc);
  }
  return Reader(text).document(v, "");
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot read '" + path + "'", path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

// ---------------------------------------------------------------------------
// Emission

namespace {

json header(DocKind k) { return {{"version", kGdfVersion}, {"kind", to_string(k)}}; }

json labels_json(const std::vector<std::string>& labels) { return json(labels); }

}  // namespace

json to_json(const Document& d) {
  json out = header(d.kind);
  switch (d.kind) {
    case DocKind::Groupoid: {
      const Groupoid& g = d.groupoid();
      out["elements"] = labels_json(g.labels());
      json products = json::array();
      for (Elem a = 0; a < g.size(); ++a)
        for (Elem b = 0; b < g.size(); ++b)
          if (auto ab = g.compose(a, b))
            products.push_back({g.label(a), g.label(b), g.label(*ab)});
      out["products"] = std::move(products);
      break;
    }
    case DocKind::Group: {
      const Groupoid& g = d.groupoid();
      out["elements"] = labels_json(g.labels());
      json rows = json::array();
      for (Elem a = 0; a < g.size(); ++a) {
        json row = json::array();
        for (Elem b = 0; b < g.size(); ++b) row.push_back(g.label(g.mul(a, b)));
        rows.push_back(std::move(row));
      }
      out["table"] = std::move(rows);
      break;
    }
    case DocKind::Subset: out["members"] = d.subset().members; break;
    case DocKind::Hom: out["map"] = d.hom().map; break;
    case DocKind::Series: out["chain"] = d.series().chain; break;
    case DocKind::PartialAction: {
      const ActionDoc& a = d.action();
      out["group"] = to_json(Document{DocKind::Group, a.group});
      out["set"] = a.set;
      out["maps"] = a.maps;
      if (a.exel) out["acting"] = "exel";
      break;
    }
    case DocKind::InverseSemigroup: {
      const auto& s = d.semigroup().semigroup;
      out["elements"] = labels_json(s.labels());
      json rows = json::array();
      std::vector<std::string> star;
      for (Elem a = 0; a < s.size(); ++a) {
        json row = json::array();
        for (Elem b = 0; b < s.size(); ++b) row.push_back(s.label(s.mul(a, b)));
        rows.push_back(std::move(row));
        star.push_back(s.label(s.star(a)));
      }
      out["table"] = std::move(rows);
      out["star"] = star;
      break;
    }
  }
  return out;
}

std::string render_table(const std::vector<std::string>& labels,
                         const std::function<std::optional<Elem>(Elem, Elem)>& product) {
  std::size_t w = 1;
  for (const auto& l : labels) w = std::max(w, l.size());
  auto pad = [&](const std::string& s) { return s + std::string(w - s.size() + 1, ' '); };
  std::string out = pad("*") + "| ";
  for (const auto& l : labels) out += pad(l);
  out += '\n' + std::string(w + 1, '-') + '+' + std::string(labels.size() * (w + 1) + 1, '-') + '\n';
  for (Elem a = 0; a < labels.size(); ++a) {
    out += pad(labels[a]) + "| ";
    for (Elem b = 0; b < labels.size(); ++b) {
      auto p = product(a, b);
      out += pad(p ? labels[*p] : ".");
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

namespace {

std::string braces(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out + "}";
}

}  // namespace

std::string emit_document(const Document& d, EmitMode mode) {
  if (mode == EmitMode::Machine) return to_json(d).dump() + "\n";
  std::ostringstream out;
  switch (d.kind) {
    case DocKind::Groupoid:
    case DocKind::Group: {
      const Groupoid& g = d.groupoid();
      out << (d.kind == DocKind::Group ? "group" : "groupoid") << " with " << g.size()
          << " elements and " << g.identities().size() << " identities\n";
      out << render_table(g.labels(), [&](Elem a, Elem b) { return g.compose(a, b); });
      break;
    }
    case DocKind::Subset: out << "subset " << braces(d.subset().members) << "\n"; break;
    case DocKind::Hom:
      out << "hom\n";
      for (const auto& [k, v] : d.hom().map) out << "  " << k << " -> " << v << "\n";
      break;
    case DocKind::Series: {
      const auto& c = d.series().chain;
      out << "series with " << c.size() << " terms\n";
      for (std::size_t i = 0; i < c.size(); ++i) out << "  " << i << ": " << braces(c[i]) << "\n";
      break;
    }
    case DocKind::PartialAction: {
      const ActionDoc& a = d.action();
      out << (a.exel ? "E(G)-action" : "partial action") << " on " << braces(a.set) << "\n";
      for (const auto& [k, m] : a.maps) {
        std::vector<std::string> parts;
        for (const auto& [x, y] : m) parts.push_back(x + "->" + y);
        out << "  " << k << ": " << braces(parts) << "\n";
      }
      break;
    }
    case DocKind::InverseSemigroup: {
      const auto& s = d.semigroup().semigroup;
      out << "inverse semigroup with " << s.size() << " elements\n";
      out << render_table(s.labels(), [&](Elem a, Elem b) { return std::optional(s.mul(a, b)); });
      for (Elem a = 0; a < s.size(); ++a) out << "  " << s.label(a) << "* = " << s.label(s.star(a)) << "\n";
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Constructors

Document groupoid_document(const Groupoid& g) { return {DocKind::Groupoid, g}; }

Document group_document(const Groupoid& g) {
  if (!is_group(g)) fail(ErrorKind::NotAGroup, "the groupoid has more than one identity");
  return {DocKind::Group, g};
}

Document subset_document(const Groupoid& g, const ElemSet& s) {
  SubsetDoc d;
  for (Elem e : s.members()) d.members.push_back(g.label(e));
  return {DocKind::Subset, d};
}

Document hom_document(const Hom& h) {
  HomDoc d;
  for (Elem e = 0; e < h.domain.size(); ++e) d.map[h.domain.label(e)] = h.codomain.label(h.map[e]);
  return {DocKind::Hom, d};
}

Document series_document(const Groupoid& g, const std::vector<ElemSet>& chain) {
  SeriesDoc d;
  for (const auto& s : chain) {
    std::vector<std::string> term;
    for (Elem e : s.members()) term.push_back(g.label(e));
    d.chain.push_back(std::move(term));
  }
  return {DocKind::Series, d};
}

namespace {

std::map<std::string, std::string> graph(const PartialBijection& f,
                                         const std::vector<std::string>& points) {
  std::map<std::string, std::string> out;
  for (Elem x = 0; x < f.universe(); ++x)
    if (f.defined(x)) out[points[x]] = points[static_cast<Elem>(f.image[x])];
  return out;
}

PartialBijection ungraph(const std::map<std::string, std::string>& m,
                         const std::vector<std::string>& points, const std::string& key) {
  PartialTable probe(points);
  PartialBijection f = PartialBijection::empty(points.size());
  ElemSet hit(points.size());
  for (const auto& [x, y] : m) {
    const Elem a = probe.at(x), b = probe.at(y);
    if (hit.contains(b))
      fail(ErrorKind::SchemaError, "the map for '" + key + "' is not injective", "/maps/" + key);
    hit.insert(b);
    f.image[a] = static_cast<int>(b);
  }
  return f;
}

}  // namespace

Document action_document(const PartialAction& p) {
  ActionDoc d{p.group, false, p.points, {}};
  for (Elem g = 0; g < p.group.size(); ++g) d.maps[p.group.label(g)] = graph(p.maps[g], p.points);
  return {DocKind::PartialAction, std::move(d)};
}

Document action_document(const ExelSemigroup& e, const SemigroupAction& a) {
  ActionDoc d{e.group, true, a.points, {}};
  for (Elem x = 0; x < e.elements.size(); ++x)
    d.maps[e.semigroup.label(x)] = graph(a.phi[x], a.points);
  return {DocKind::PartialAction, std::move(d)};
}

Document semigroup_document(const FiniteInverseSemigroup& s) {
  return {DocKind::InverseSemigroup, SemigroupDoc{s}};
}

PartialAction to_partial_action(const ActionDoc& d) {
  if (d.exel) fail(ErrorKind::SchemaError, "expected a group action, got an E(G)-action", "/acting");
  std::vector<PartialBijection> maps;
  for (Elem g = 0; g < d.group.size(); ++g) {
    auto it = d.maps.find(d.group.label(g));
    if (it == d.maps.end())
      fail(ErrorKind::SchemaError, "no map for '" + d.group.label(g) + "'", "/maps");
    maps.push_back(ungraph(it->second, d.set, it->first));
  }
  for (const auto& [k, m] : d.maps)
    if (!d.group.find(k)) fail(ErrorKind::UnknownLabel, "unknown group element '" + k + "'", k);
  return {d.group, d.set, std::move(maps)};
}

SemigroupAction to_semigroup_action(const ActionDoc& d, const ExelSemigroup& e) {
  if (!d.exel) fail(ErrorKind::SchemaError, "expected an E(G)-action, got a group action", "/acting");
  SemigroupAction a{d.set, {}};
  for (Elem x = 0; x < e.elements.size(); ++x) {
    auto it = d.maps.find(e.semigroup.label(x));
    if (it == d.maps.end())
      fail(ErrorKind::SchemaError, "no map for '" + e.semigroup.label(x) + "'", "/maps");
    a.phi.push_back(ungraph(it->second, d.set, it->first));
  }
  for (const auto& [k, m] : d.maps)
    if (!e.semigroup.find(k)) fail(ErrorKind::UnknownLabel, "unknown element '" + k + "'", k);
  return a;
}

}  // namespace grpd
