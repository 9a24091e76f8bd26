#include "zsprod/serialize.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace zsp {

std::string csv_row(const TupleA& t) {
  std::ostringstream os;
  os << t.a << ',' << t.s << ',' << t.t << ',' << t.c;
  return os.str();
}

std::string csv_row(const TupleB& t) {
  std::ostringstream os;
  os << t.r << ',' << t.a << ',' << t.s << ',' << t.b << ',' << t.t << ',' << t.c;
  return os.str();
}

std::vector<Residue> parse_tuple(const std::string& text) {
  std::vector<Residue> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::string field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    while (!field.empty() && field.back() == ' ') field.pop_back();
    Residue v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::parse_error, "malformed tuple '" + text + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

Json to_json(const TupleA& t) {
  return Json{{"a", t.a}, {"s", t.s}, {"t", t.t}, {"c", t.c}};
}

Json to_json(const TupleB& t) {
  return Json{{"r", t.r}, {"a", t.a}, {"s", t.s}, {"b", t.b}, {"t", t.t}, {"c", t.c}};
}

Json to_json(const Verdict& v) {
  Json failed = Json::array();
  for (const auto& f : v.failed) {
    failed.push_back({{"condition", to_string(f.condition)}, {"residual", f.residual}});
  }
  return Json{{"valid", v.valid()}, {"failed", failed}};
}

void write_text(std::ostream& os, const Verdict& v) {
  os << (v.valid() ? "valid" : "invalid") << '\n';
  for (const auto& f : v.failed) {
    os << "  fails " << to_string(f.condition) << " (residual " << f.residual << ")\n";
  }
}

namespace {

std::string index_label(const ConsistencyEntry& e) {
  std::string s = "(" + std::to_string(e.index[0]) + "," + std::to_string(e.index[1]);
  if (e.family == Family::C) s += "," + std::to_string(e.index[2]);
  return s + ")";
}

}  // namespace

Json to_json(const ConsistencyReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json idx = Json::array({e.index[0], e.index[1]});
    if (e.family == Family::C) idx.push_back(e.index[2]);
    entries.push_back({{"family", to_string(e.family)},
                       {"index", idx},
                       {"passed", e.passed},
                       {"residual", {{"z", e.residual.z}, {"x", e.residual.x}}}});
  }
  return Json{{"overall", r.overall()}, {"entries", entries}};
}

void write_text(std::ostream& os, const ConsistencyReport& r) {
  for (const auto& e : r.entries) {
    os << "  " << to_string(e.family) << index_label(e) << ' '
       << (e.passed ? "ok" : "FAIL");
    if (!e.passed) os << " (residual z^" << e.residual.z << " x^" << e.residual.x << ')';
    os << '\n';
  }
  os << "consistent: " << (r.overall() ? "yes" : "no") << '\n';
}

Json to_json(const FactorizationReport& r) {
  return Json{{"order", r.order},
              {"order_h", r.h_order},
              {"order_k", r.k_order},
              {"order_h_cap_k", r.intersection_order},
              {"x_normal", r.x_normal},
              {"z_normal", r.z_normal},
              {"core_x_order", r.core_x_order},
              {"core_z_order", r.core_z_order},
              {"h_semidihedral", r.h_semidihedral},
              {"k_semidihedral", r.k_semidihedral}};
}

void write_text(std::ostream& os, const FactorizationReport& r) {
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "order: " << r.order << '\n'
     << "|H| = |<x,y>|: " << r.h_order << '\n'
     << "|K| = |<z,w>|: " << r.k_order << '\n'
     << "|H cap K|: " << r.intersection_order << '\n'
     << "<x> normal: " << yn(r.x_normal) << '\n'
     << "<z> normal: " << yn(r.z_normal) << '\n'
     << "|core <x>|: " << r.core_x_order << '\n'
     << "|core <z>|: " << r.core_z_order << '\n'
     << "H semidihedral relations: " << yn(r.h_semidihedral) << '\n'
     << "K semidihedral relations: " << yn(r.k_semidihedral) << '\n';
}

namespace {

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const StructureReport& r) {
  Json comm = nullptr;
  if (r.xz_exponents) comm = Json{{"e1", r.xz_exponents->first}, {"e2", r.xz_exponents->second}};
  return Json{{"order", r.order},
              {"order_w", opt(r.order_w)},
              {"order_y", opt(r.order_y)},
              {"order_z", opt(r.order_z)},
              {"order_x", opt(r.order_x)},
              {"order_h", opt(r.order_h)},
              {"order_k", opt(r.order_k)},
              {"order_h_cap_k", opt(r.order_h_cap_k)},
              {"h_semidihedral", opt(r.h_semidihedral)},
              {"k_semidihedral", opt(r.k_semidihedral)},
              {"xz_trivial", opt(r.xz_trivial)},
              {"xz_commutator", comm},
              {"core_x_order", opt(r.core_x_order)},
              {"core_z_order", opt(r.core_z_order)}};
}

void write_text(std::ostream& os, const StructureReport& r) {
  const auto field = [&](const char* name, const auto& v) {
    os << name << ": ";
    if (v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, bool>) {
        os << (*v ? "yes" : "no");
      } else {
        os << *v;
      }
    } else {
      os << "n/a";
    }
    os << '\n';
  };
  os << "order: " << r.order << '\n';
  field("order(w)", r.order_w);
  field("order(y)", r.order_y);
  field("order(z)", r.order_z);
  field("order(x)", r.order_x);
  field("|<x,y>|", r.order_h);
  field("|<z,w>|", r.order_k);
  field("|<x,y> cap <z,w>|", r.order_h_cap_k);
  field("<x,y> semidihedral relations", r.h_semidihedral);
  field("<z,w> semidihedral relations", r.k_semidihedral);
  os << "[x,z]: ";
  if (!r.xz_trivial) {
    os << "n/a";
  } else if (*r.xz_trivial) {
    os << "1";
  } else if (r.xz_exponents) {
    os << "x^" << r.xz_exponents->first << " z^" << r.xz_exponents->second;
  } else {
    os << "outside <x><z>";
  }
  os << '\n';
  field("|core <x>|", r.core_x_order);
  field("|core <z>|", r.core_z_order);
}

void write_group_table(std::ostream& os, const SdPair& pair,
                       const std::vector<Residue>& tuple, const GroupTable& g) {
  os << "zsprod-group-table 1\n"
     << "n " << pair.n << '\n'
     << "m " << pair.m << '\n'
     << "tuple";
  for (auto v : tuple) os << ' ' << v;
  const auto& gens = g.generators();
  os << "\norder " << g.order() << '\n'
     << "generators w " << gens.w << " y " << gens.y << " z " << gens.z << " x " << gens.x
     << '\n'
     << "table\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto row = g.row(static_cast<ElementIndex>(a));
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b) os << ' ';
      os << row[b];
    }
    os << '\n';
  }
  os << "end\n";
}

TableFile read_group_table(std::istream& is) {
  const auto fail = [](const std::string& why) {
    throw Error(ErrorKind::parse_error, "group table: " + why);
  };
  const auto expect = [&](const std::string& key, std::istringstream& line) {
    std::string k;
    line >> k;
    if (k != key) fail("expected '" + key + "', got '" + k + "'");
  };
  std::string text;
  const auto next = [&]() {
    if (!std::getline(is, text)) fail("unexpected end of input");
    return std::istringstream(text);
  };
  TableFile out;
  {
    auto l = next();
    std::string magic;
    int version = 0;
    l >> magic >> version;
    if (magic != "zsprod-group-table" || version != 1) fail("bad header");
  }
  {
    auto l = next();
    expect("n", l);
    l >> out.n;
  }
  {
    auto l = next();
    expect("m", l);
    l >> out.m;
  }
  {
    auto l = next();
    expect("tuple", l);
    Residue v;
    while (l >> v) out.tuple.push_back(v);
  }
  std::size_t order = 0;
  {
    auto l = next();
    expect("order", l);
    l >> order;
  }
  GroupTable::Generators gens;
  {
    auto l = next();
    expect("generators", l);
    std::string name;
    for (ElementIndex* slot : {&gens.w, &gens.y, &gens.z, &gens.x}) {
      l >> name >> *slot;
    }
    if (!l) fail("bad generator line");
  }
  {
    auto l = next();
    expect("table", l);
  }
  std::vector<ElementIndex> product;
  product.reserve(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    auto l = next();
    ElementIndex v;
    std::size_t count = 0;
    while (l >> v) {
      product.push_back(v);
      ++count;
    }
    if (count != order) fail("row " + std::to_string(a) + " has the wrong length");
  }
  {
    auto l = next();
    expect("end", l);
  }
  std::vector<NormalForm> labels;
  if (out.n >= kMinRank && out.m >= kMinRank) {
    const SdPair pair = derive_pair(out.n, out.m);
    for (std::size_t i = 0; i < order; ++i) {
      labels.push_back(normal_form_at(pair, static_cast<ElementIndex>(i)));
    }
  }
  out.table = GroupTable(order, std::move(product), std::move(labels), gens);
  return out;
}

}  // namespace zsp
