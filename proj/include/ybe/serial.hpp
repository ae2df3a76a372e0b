// JSON documents for every structure the workbench handles: a tagged
// on-disk format, strict schema validation (shape errors are ParseError,
// semantic failures are ledger lines), canonical emission with a fixed key
// order so emitted files are byte-stable, and conversions between documents
// and the in-memory types.
#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "averaging.hpp"
#include "groups.hpp"
#include "hemi.hpp"

namespace ybe {
inline namespace cli {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// document kinds and payloads

enum class DocKind { group, shelf, digroup, diskew, solution, hemipair, avgmap };

inline const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::group: return "group";
    case DocKind::shelf: return "shelf";
    case DocKind::digroup: return "digroup";
    case DocKind::diskew: return "diskew";
    case DocKind::solution: return "solution";
    case DocKind::hemipair: return "hemipair";
    case DocKind::avgmap: return "avgmap";
  }
  return "?";
}

inline std::optional<DocKind> kind_from_string(std::string_view s) {
  for (DocKind k : {DocKind::group, DocKind::shelf, DocKind::digroup, DocKind::diskew,
                    DocKind::solution, DocKind::hemipair, DocKind::avgmap})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

// shape/schema violations; the CLI maps these to its "malformed input" exit
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupDoc {
  BinOpTable table;
  int identity = 0;
  bool operator==(const GroupDoc&) const = default;
};

struct ShelfDoc {
  BinOpTable tri;
  bool operator==(const ShelfDoc&) const = default;
};

struct DigroupDoc {
  BinOpTable vdash, dashv;
  bool operator==(const DigroupDoc&) const = default;
};

struct DiskewDoc {
  DigroupDoc digroup;
  BinOpTable circ;
  int zero = 0;
  bool operator==(const DiskewDoc&) const = default;
};

struct SolutionDoc {
  BinOpTable lambda, rho;
  bool operator==(const SolutionDoc&) const = default;
};

struct HemiPairDoc {
  ShelfDoc shelf;                       // the base shelf (G, |>)
  std::vector<std::vector<int>> twist;  // row a = images of lambda_a on G
  int esize = 0;                        // size of the coefficient carrier E
  std::vector<std::vector<int>> psi;    // row a = images of psi_a on E
  std::vector<std::vector<int>> sigma;  // row a = images of sigma_a on E
  bool operator==(const HemiPairDoc&) const = default;
};

struct AvgMapDoc {
  GroupDoc group;
  std::vector<int> map;  // images of the operator on the group carrier
  bool operator==(const AvgMapDoc&) const = default;
};

struct StructureDocument {
  DocKind kind = DocKind::group;
  std::variant<GroupDoc, ShelfDoc, DigroupDoc, DiskewDoc, SolutionDoc, HemiPairDoc, AvgMapDoc>
      payload;
  std::vector<std::string> names;  // optional element labels, empty when absent
  bool operator==(const StructureDocument&) const = default;
};

// size of the primary carrier a document describes; hemipair documents are
// labelled by their base shelf carrier
inline int carrier_size(const StructureDocument& d) {
  switch (d.kind) {
    case DocKind::group: return std::get<GroupDoc>(d.payload).table.n;
    case DocKind::shelf: return std::get<ShelfDoc>(d.payload).tri.n;
    case DocKind::digroup: return std::get<DigroupDoc>(d.payload).vdash.n;
    case DocKind::diskew: return std::get<DiskewDoc>(d.payload).digroup.vdash.n;
    case DocKind::solution: return std::get<SolutionDoc>(d.payload).lambda.n;
    case DocKind::hemipair: return std::get<HemiPairDoc>(d.payload).shelf.tri.n;
    case DocKind::avgmap: return std::get<AvgMapDoc>(d.payload).group.table.n;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// parsing

namespace serial_detail {

[[noreturn]] inline void fail(const std::string& ctx, const std::string& what) {
  throw ParseError(ctx + ": " + what);
}

inline void check_keys(const json& j, const std::string& ctx,
                       std::initializer_list<const char*> required,
                       std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(ctx, "expected a JSON object");
  for (const char* k : required)
    if (!j.contains(k)) fail(ctx, std::string("missing key \"") + k + "\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : required) known = known || it.key() == k;
    for (const char* k : optional) known = known || it.key() == k;
    if (!known) fail(ctx, "unknown key \"" + it.key() + "\"");
  }
}

inline int get_int(const json& j, const char* key, const std::string& ctx) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) fail(ctx, std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

inline int get_index(const json& j, const char* key, int n, const std::string& ctx) {
  int v = get_int(j, key, ctx);
  if (v < 0 || v >= n)
    fail(ctx, std::string("\"") + key + "\" = " + std::to_string(v) + " out of range [0," +
                  std::to_string(n) + ")");
  return v;
}

// rows: `nrows` arrays of `width` integers, every entry in [0, range)
inline std::vector<std::vector<int>> get_rows(const json& j, const char* key, int nrows, int width,
                                              int range, const std::string& ctx) {
  const json& v = j.at(key);
  std::string where = ctx + ".\"" + key + "\"";
  if (!v.is_array() || int(v.size()) != nrows)
    fail(where, "expected " + std::to_string(nrows) + " rows");
  std::vector<std::vector<int>> rows(nrows);
  for (int r = 0; r < nrows; ++r) {
    const json& row = v[r];
    if (!row.is_array() || int(row.size()) != width)
      fail(where, "row " + std::to_string(r) + " must have " + std::to_string(width) + " entries");
    rows[r].resize(width);
    for (int c = 0; c < width; ++c) {
      if (!row[c].is_number_integer())
        fail(where, "row " + std::to_string(r) + " entry " + std::to_string(c) +
                        " must be an integer");
      int x = row[c].get<int>();
      if (x < 0 || x >= range)
        fail(where, "entry " + std::to_string(x) + " at row " + std::to_string(r) +
                        " out of range [0," + std::to_string(range) + ")");
      rows[r][c] = x;
    }
  }
  return rows;
}

inline BinOpTable get_table(const json& j, const char* key, int n, const std::string& ctx) {
  return BinOpTable::from_rows(get_rows(j, key, n, n, n, ctx));
}

inline int get_carrier(const json& j, const std::string& ctx) {
  int n = get_int(j, "n", ctx);
  if (n < 1) fail(ctx, "\"n\" must be at least 1");
  return n;
}

inline GroupDoc parse_group_payload(const json& j, const std::string& ctx) {
  check_keys(j, ctx, {"n", "table", "identity"});
  int n = get_carrier(j, ctx);
  return {get_table(j, "table", n, ctx), get_index(j, "identity", n, ctx)};
}

inline ShelfDoc parse_shelf_payload(const json& j, const std::string& ctx) {
  check_keys(j, ctx, {"n", "tri"});
  int n = get_carrier(j, ctx);
  return {get_table(j, "tri", n, ctx)};
}

inline DigroupDoc parse_digroup_payload(const json& j, const std::string& ctx) {
  check_keys(j, ctx, {"n", "vdash", "dashv"});
  int n = get_carrier(j, ctx);
  return {get_table(j, "vdash", n, ctx), get_table(j, "dashv", n, ctx)};
}

}  // namespace serial_detail

inline StructureDocument parse_document(const json& j) {
  using namespace serial_detail;
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  if (!j.contains("kind")) throw ParseError("document: missing key \"kind\"");
  if (!j.at("kind").is_string()) throw ParseError("document: \"kind\" must be a string");
  auto kind = kind_from_string(j.at("kind").get<std::string>());
  if (!kind)
    throw ParseError("document: unknown kind \"" + j.at("kind").get<std::string>() + "\"");

  StructureDocument doc;
  doc.kind = *kind;
  // strip the envelope keys, parse the payload from what remains
  json body = j;
  body.erase("kind");
  if (body.contains("names")) body.erase("names");

  switch (*kind) {
    case DocKind::group: doc.payload = parse_group_payload(body, "group"); break;
    case DocKind::shelf: doc.payload = parse_shelf_payload(body, "shelf"); break;
    case DocKind::digroup: doc.payload = parse_digroup_payload(body, "digroup"); break;
    case DocKind::diskew: {
      check_keys(body, "diskew", {"digroup", "circ", "zero"});
      DiskewDoc d;
      d.digroup = parse_digroup_payload(body.at("digroup"), "diskew.digroup");
      int n = d.digroup.vdash.n;
      d.circ = get_table(body, "circ", n, "diskew");
      d.zero = get_index(body, "zero", n, "diskew");
      doc.payload = std::move(d);
      break;
    }
    case DocKind::solution: {
      check_keys(body, "solution", {"n", "lambda", "rho"});
      int n = get_carrier(body, "solution");
      doc.payload = SolutionDoc{get_table(body, "lambda", n, "solution"),
                                get_table(body, "rho", n, "solution")};
      break;
    }
    case DocKind::hemipair: {
      check_keys(body, "hemipair", {"shelf", "twist", "E", "psi", "sigma"});
      HemiPairDoc h;
      h.shelf = parse_shelf_payload(body.at("shelf"), "hemipair.shelf");
      int n = h.shelf.tri.n;
      h.twist = get_rows(body, "twist", n, n, n, "hemipair");
      h.esize = get_int(body, "E", "hemipair");
      if (h.esize < 1) fail("hemipair", "\"E\" must be at least 1");
      h.psi = get_rows(body, "psi", n, h.esize, h.esize, "hemipair");
      h.sigma = get_rows(body, "sigma", n, h.esize, h.esize, "hemipair");
      doc.payload = std::move(h);
      break;
    }
    case DocKind::avgmap: {
      check_keys(body, "avgmap", {"group", "map"});
      AvgMapDoc a;
      a.group = parse_group_payload(body.at("group"), "avgmap.group");
      int n = a.group.table.n;
      const json& m = body.at("map");
      if (!m.is_array() || int(m.size()) != n)
        fail("avgmap", "\"map\" must have one entry per group element");
      for (const auto& v : m) {
        if (!v.is_number_integer()) fail("avgmap", "\"map\" entries must be integers");
        int x = v.get<int>();
        if (x < 0 || x >= n)
          fail("avgmap",
               "\"map\" entry " + std::to_string(x) + " out of range [0," + std::to_string(n) + ")");
        a.map.push_back(x);
      }
      doc.payload = std::move(a);
      break;
    }
  }

  if (j.contains("names")) {
    const json& names = j.at("names");
    if (!names.is_array()) throw ParseError("document: \"names\" must be an array of strings");
    for (const auto& s : names) {
      if (!s.is_string()) throw ParseError("document: \"names\" must be an array of strings");
      doc.names.push_back(s.get<std::string>());
    }
    if (int(doc.names.size()) != carrier_size(doc))
      throw ParseError("document: \"names\" must have one entry per carrier element");
  }
  return doc;
}

inline StructureDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

inline StructureDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document_text(buf.str());
}

// ---------------------------------------------------------------------------
// emission (canonical key order; emitting then parsing is the identity)

namespace serial_detail {

inline json rows_json(const std::vector<std::vector<int>>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(r);
  return arr;
}

inline json table_json(const BinOpTable& t) { return rows_json(t.rows()); }

inline json group_json(const GroupDoc& g) {
  return json{{"n", g.table.n}, {"table", table_json(g.table)}, {"identity", g.identity}};
}

inline json shelf_json(const ShelfDoc& s) {
  return json{{"n", s.tri.n}, {"tri", table_json(s.tri)}};
}

inline json digroup_json(const DigroupDoc& d) {
  return json{{"n", d.vdash.n}, {"vdash", table_json(d.vdash)}, {"dashv", table_json(d.dashv)}};
}

}  // namespace serial_detail

inline json emit_document(const StructureDocument& d) {
  using namespace serial_detail;
  json j{{"kind", to_string(d.kind)}};
  auto splice = [&](json body) {
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = std::move(it.value());
  };
  switch (d.kind) {
    case DocKind::group: splice(group_json(std::get<GroupDoc>(d.payload))); break;
    case DocKind::shelf: splice(shelf_json(std::get<ShelfDoc>(d.payload))); break;
    case DocKind::digroup: splice(digroup_json(std::get<DigroupDoc>(d.payload))); break;
    case DocKind::diskew: {
      const auto& b = std::get<DiskewDoc>(d.payload);
      j["digroup"] = digroup_json(b.digroup);
      j["circ"] = table_json(b.circ);
      j["zero"] = b.zero;
      break;
    }
    case DocKind::solution: {
      const auto& s = std::get<SolutionDoc>(d.payload);
      j["n"] = s.lambda.n;
      j["lambda"] = table_json(s.lambda);
      j["rho"] = table_json(s.rho);
      break;
    }
    case DocKind::hemipair: {
      const auto& h = std::get<HemiPairDoc>(d.payload);
      j["shelf"] = shelf_json(h.shelf);
      j["twist"] = rows_json(h.twist);
      j["E"] = h.esize;
      j["psi"] = rows_json(h.psi);
      j["sigma"] = rows_json(h.sigma);
      break;
    }
    case DocKind::avgmap: {
      const auto& a = std::get<AvgMapDoc>(d.payload);
      j["group"] = group_json(a.group);
      j["map"] = a.map;
      break;
    }
  }
  if (!d.names.empty()) j["names"] = d.names;
  return j;
}

inline std::string document_text(const StructureDocument& d) {
  return emit_document(d).dump(2) + "\n";
}

inline void write_document_file(const StructureDocument& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << document_text(d);
}

// ---------------------------------------------------------------------------
// documents from in-memory structures

inline StructureDocument from_group(const GroupTable& g) {
  return {DocKind::group, GroupDoc{g.op, g.identity}, {}};
}

inline StructureDocument from_shelf(const Shelf& s) {
  return {DocKind::shelf, ShelfDoc{s.tri}, {}};
}

inline StructureDocument from_digroup(const GDigroup& d) {
  return {DocKind::digroup, DigroupDoc{d.vdash, d.dashv}, {}};
}

inline StructureDocument from_diskew(const DiSkewBrace& b) {
  return {DocKind::diskew, DiskewDoc{{b.dig.vdash, b.dig.dashv}, b.circ, b.zero}, {}};
}

inline StructureDocument from_solution(const SolutionTable& r) {
  return {DocKind::solution, SolutionDoc{r.lambda, r.rho}, {}};
}

inline StructureDocument from_hemipair(const HemiPair& h) {
  HemiPairDoc doc;
  doc.shelf = ShelfDoc{h.base.shelf.tri};
  doc.esize = h.esize;
  for (int a = 0; a < h.gsize(); ++a) {
    doc.twist.push_back(h.base.phi[a].img);
    doc.psi.push_back(h.psi[a].img);
    doc.sigma.push_back(h.sigma[a].img);
  }
  return {DocKind::hemipair, std::move(doc), {}};
}

inline StructureDocument from_avgmap(const GroupTable& g, const std::vector<int>& f) {
  return {DocKind::avgmap, AvgMapDoc{GroupDoc{g.op, g.identity}, f}, {}};
}

// ---------------------------------------------------------------------------
// in-memory structures from documents (verified; semantic failures throw
// VerificationError, never ParseError)

inline GroupTable to_group(const GroupDoc& g);
inline VerifyReport group_report(const BinOpTable& t, std::optional<int> claimed_identity);

inline Shelf to_shelf(const ShelfDoc& s) { return make_shelf(s.tri); }

inline GDigroup to_digroup(const DigroupDoc& d) { return GDigroup::verified(d.vdash, d.dashv); }

inline DiSkewBrace to_diskew(const DiskewDoc& d) {
  return DiSkewBrace::verified(d.digroup.vdash, d.digroup.dashv, d.circ, d.zero);
}

inline SolutionTable to_solution(const SolutionDoc& s) { return make_solution(s.lambda, s.rho); }

inline HemiPair to_hemipair(const HemiPairDoc& h) {
  Shelf base = make_shelf(h.shelf.tri);
  std::vector<Permutation> phi, psi, sigma;
  for (const auto& row : h.twist) phi.emplace_back(row);
  for (const auto& row : h.psi) psi.emplace_back(row);
  for (const auto& row : h.sigma) sigma.emplace_back(row);
  return HemiPair::verified(Twist{std::move(base), std::move(phi)}, std::move(psi),
                            std::move(sigma));
}

// ---------------------------------------------------------------------------
// the per-kind verification ledger

// `axioms` are what the kind claims (their failure is a semantic error);
// `properties` are informational classification lines that never affect ok()
struct DocumentReport {
  VerifyReport axioms;
  std::vector<AxiomResult> properties;
  bool ok() const { return axioms.ok(); }
};

inline VerifyReport group_report(const BinOpTable& t, std::optional<int> claimed_identity) {
  VerifyReport rep;
  auto w = associativity_witness(t);
  rep.add("(a*b)*c == a*(b*c)", !w,
          w ? std::vector<int>(w->begin(), w->end()) : std::vector<int>{});
  int e = -1;
  for (int x = 0; x < t.n && e < 0; ++x) {
    bool ident = true;
    for (int a = 0; a < t.n; ++a) ident = ident && t(x, a) == a && t(a, x) == a;
    if (ident) e = x;
  }
  rep.add("a two-sided identity exists", e >= 0);
  if (claimed_identity)
    rep.add("the declared identity is the identity", e == *claimed_identity,
            e == *claimed_identity ? std::vector<int>{} : std::vector<int>{*claimed_identity});
  if (e < 0) return rep;
  std::optional<std::vector<int>> nw;
  for (int a = 0; a < t.n && !nw; ++a) {
    bool has = false;
    for (int b = 0; b < t.n; ++b) has = has || (t(a, b) == e && t(b, a) == e);
    if (!has) nw = {a};
  }
  rep.add("every element has a two-sided inverse", !nw, nw.value_or(std::vector<int>{}));
  return rep;
}

inline GroupTable to_group(const GroupDoc& g) {
  auto rep = group_report(g.table, g.identity);
  if (!rep.ok()) throw VerificationError(std::move(rep));
  return is_group(g.table).value();
}

namespace serial_detail {

// index of the first row that is not a permutation, as a one-element witness
inline std::vector<int> first_bad_row(const std::vector<std::vector<int>>& rows) {
  for (size_t a = 0; a < rows.size(); ++a)
    if (!is_permutation(rows[a])) return {int(a)};
  return {};
}

// first cell where the two tables disagree, as a two-element witness
inline std::vector<int> first_table_difference(const BinOpTable& s, const BinOpTable& t) {
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (s(a, b) != t(a, b)) return {a, b};
  return {};
}

inline DocumentReport verify_group_doc(const GroupDoc& g) {
  DocumentReport rep;
  rep.axioms = group_report(g.table, g.identity);
  std::vector<int> cw;
  for (int a = 0; a < g.table.n && cw.empty(); ++a)
    for (int b = 0; b < a && cw.empty(); ++b)
      if (g.table(a, b) != g.table(b, a)) cw = {a, b};
  rep.properties.push_back({"the operation is commutative", cw.empty(), cw});
  return rep;
}

inline DocumentReport verify_shelf_doc(const ShelfDoc& s) {
  DocumentReport rep;
  rep.axioms = shelf_report(s.tri);
  std::vector<int> rw = first_bad_row(s.tri.rows());
  std::vector<int> qw = rw;
  for (int a = 0; a < s.tri.n && qw.empty(); ++a)
    if (s.tri(a, a) != a) qw = {a};
  rep.properties.push_back({"every left translation is a bijection (rack)", rw.empty(), rw});
  rep.properties.push_back({"a |> a == a for every a (quandle)", qw.empty(), qw});
  return rep;
}

inline DocumentReport verify_digroup_doc(const DigroupDoc& d) {
  DocumentReport rep;
  rep.axioms = g_digroup_report(d.vdash, d.dashv);
  std::vector<int> w = first_table_difference(d.vdash, d.dashv);
  rep.properties.push_back({"|- and -| coincide", w.empty(), w});
  return rep;
}

inline DocumentReport verify_diskew_doc(const DiskewDoc& d) {
  DocumentReport rep;
  rep.axioms = diskew_report(d.digroup.vdash, d.digroup.dashv, d.circ);
  auto halo = halo_of(d.digroup.vdash, d.digroup.dashv);
  bool zero_ok = std::find(halo.begin(), halo.end(), d.zero) != halo.end();
  rep.axioms.add("the declared zero is a bar-unit", zero_ok,
                 zero_ok ? std::vector<int>{} : std::vector<int>{d.zero});
  std::vector<int> w = first_table_difference(d.digroup.vdash, d.digroup.dashv);
  rep.properties.push_back({"|- and -| coincide (skew brace)", w.empty(), w});
  return rep;
}

inline DocumentReport verify_solution_doc(const SolutionDoc& s) {
  DocumentReport rep;
  SolutionTable r{s.lambda.n, s.lambda, s.rho};
  rep.axioms = ybe_report(r);
  std::vector<int> lw = first_bad_row(s.lambda.rows());
  std::vector<int> rw = first_bad_row(s.rho.rows());
  std::vector<int> pw;
  std::vector<char> seen(size_t(r.n) * r.n, 0);
  for (int a = 0; a < r.n && pw.empty(); ++a)
    for (int b = 0; b < r.n && pw.empty(); ++b) {
      auto [c, d] = r.apply(a, b);
      char& slot = seen[size_t(c) * r.n + d];
      if (slot) pw = {a, b};
      slot = 1;
    }
  rep.properties.push_back(
      {"lambda_a is a bijection for every a (left nondegenerate)", lw.empty(), lw});
  rep.properties.push_back(
      {"rho_b is a bijection for every b (right nondegenerate)", rw.empty(), rw});
  rep.properties.push_back({"(a,b) -> (lambda_a(b), rho_b(a)) is a bijection", pw.empty(), pw});
  return rep;
}

inline DocumentReport verify_hemipair_doc(const HemiPairDoc& h) {
  DocumentReport rep;
  rep.axioms = shelf_report(h.shelf.tri);
  std::vector<int> tw = first_bad_row(h.twist);
  std::vector<int> pw = first_bad_row(h.psi);
  std::vector<int> sw = first_bad_row(h.sigma);
  rep.axioms.add("every twist map is a bijection of G", tw.empty(), tw);
  rep.axioms.add("every psi_a is a bijection of E", pw.empty(), pw);
  rep.axioms.add("every sigma_a is a bijection of E", sw.empty(), sw);
  if (!rep.axioms.ok()) return rep;

  Shelf base = make_shelf(h.shelf.tri);
  std::vector<Permutation> phi, psi, sigma;
  for (const auto& row : h.twist) phi.emplace_back(row);
  for (const auto& row : h.psi) psi.emplace_back(row);
  for (const auto& row : h.sigma) sigma.emplace_back(row);
  HemiPair H{Twist{std::move(base), std::move(phi)}, h.esize, std::move(psi), std::move(sigma)};
  VerifyReport inner = hemi_pair_report(H);
  for (auto& line : inner.axioms) rep.axioms.axioms.push_back(std::move(line));
  return rep;
}

inline DocumentReport verify_avgmap_doc(const AvgMapDoc& a) {
  DocumentReport rep;
  rep.axioms = group_report(a.group.table, a.group.identity);
  // averaging identities only need the raw multiplication, so they stay
  // meaningful even when the group ledger above has failures
  GroupTable raw{a.group.table, a.group.identity, {}};
  const auto& f = a.map;
  std::vector<int> lw, rw, ew, iw;
  for (int x = 0; x < raw.n() && lw.empty(); ++x)
    for (int y = 0; y < raw.n() && lw.empty(); ++y)
      if (raw.mul(f[x], f[y]) != f[raw.mul(f[x], y)]) lw = {x, y};
  for (int x = 0; x < raw.n() && rw.empty(); ++x)
    for (int y = 0; y < raw.n() && rw.empty(); ++y)
      if (raw.mul(f[x], f[y]) != f[raw.mul(x, f[y])]) rw = {x, y};
  for (int x = 0; x < raw.n() && ew.empty(); ++x)
    for (int y = 0; y < raw.n() && ew.empty(); ++y)
      if (f[raw.mul(x, y)] != raw.mul(f[x], f[y])) ew = {x, y};
  for (int x = 0; x < raw.n() && iw.empty(); ++x)
    if (f[f[x]] != f[x]) iw = {x};
  bool left = lw.empty(), right = rw.empty();
  rep.axioms.add("f(x)f(y) == f(f(x)y) or f(x)f(y) == f(x f(y))", left || right,
                 left || right ? std::vector<int>{} : lw);
  rep.properties.push_back({"f(x)f(y) == f(f(x)y) (left averaging)", left, lw});
  rep.properties.push_back({"f(x)f(y) == f(x f(y)) (right averaging)", right, rw});
  rep.properties.push_back({"f is a group endomorphism", ew.empty(), ew});
  rep.properties.push_back({"f(f(x)) == f(x) for every x", iw.empty(), iw});
  return rep;
}

}  // namespace serial_detail

inline DocumentReport verify_document(const StructureDocument& d) {
  using namespace serial_detail;
  switch (d.kind) {
    case DocKind::group: return verify_group_doc(std::get<GroupDoc>(d.payload));
    case DocKind::shelf: return verify_shelf_doc(std::get<ShelfDoc>(d.payload));
    case DocKind::digroup: return verify_digroup_doc(std::get<DigroupDoc>(d.payload));
    case DocKind::diskew: return verify_diskew_doc(std::get<DiskewDoc>(d.payload));
    case DocKind::solution: return verify_solution_doc(std::get<SolutionDoc>(d.payload));
    case DocKind::hemipair: return verify_hemipair_doc(std::get<HemiPairDoc>(d.payload));
    case DocKind::avgmap: return verify_avgmap_doc(std::get<AvgMapDoc>(d.payload));
  }
  throw std::logic_error("verify_document: unhandled kind");
}

// ---------------------------------------------------------------------------
// reports as JSON (used by the CLI's --json output)

inline json axiom_json(const AxiomResult& a) {
  return json{{"axiom", a.axiom}, {"ok", a.ok}, {"witness", a.witness}};
}

inline json report_json(const VerifyReport& rep) {
  json lines = json::array();
  for (const auto& a : rep.axioms) lines.push_back(axiom_json(a));
  return json{{"ok", rep.ok()}, {"axioms", std::move(lines)}};
}

inline json report_json(const DocumentReport& rep) {
  json j = report_json(rep.axioms);
  json props = json::array();
  for (const auto& p : rep.properties) props.push_back(axiom_json(p));
  j["properties"] = std::move(props);
  return j;
}

}  // namespace cli
}  // namespace ybe
