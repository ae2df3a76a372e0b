// ybe-forge: command-line front end for the finite-algebra workbench.
//
// Subcommands: verify, construct, order, decompose, enumerate, ybe-check,
// export. Documents are the JSON formats of ybe/serial.hpp. Exit status:
// 0 = pass, 1 = semantic failure (axiom or precondition, with witness),
// 2 = malformed input (bad JSON, bad schema, bad command line).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ybe/serial.hpp"

using namespace ybe;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

long long default_bound() {
  if (const char* env = std::getenv("YBE_FORGE_BOUND")) {
    try {
      long long b = std::stoll(env);
      if (b >= 1) return b;
    } catch (const std::exception&) {
    }
    throw ParseError("YBE_FORGE_BOUND must be a positive integer");
  }
  return 64;
}

std::vector<int> parse_csv(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": expected comma-separated integers, got \"" + item +
                       "\"");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + ": empty list");
  return out;
}

// rows are given either as JSON ("[[0,1],[1,0]]") or as semicolon-separated
// CSV rows ("0,1;1,0")
std::vector<std::vector<int>> parse_rows(const std::string& text, const char* what) {
  std::vector<std::vector<int>> rows;
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string(what) + ": " + e.what());
    }
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of rows");
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError(std::string(what) + ": expected an array of rows");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer())
          throw ParseError(std::string(what) + ": row entries must be integers");
        r.push_back(v.get<int>());
      }
      rows.push_back(std::move(r));
    }
  } else {
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_csv(row, what));
  }
  if (rows.empty()) throw ParseError(std::string(what) + ": empty table");
  return rows;
}

std::vector<Permutation> to_perms(const std::vector<std::vector<int>>& rows, const char* what) {
  std::vector<Permutation> out;
  for (const auto& r : rows) {
    if (!is_permutation(r))
      throw ParseError(std::string(what) + ": row " + std::to_string(out.size()) +
                       " is not a permutation");
    out.emplace_back(r);
  }
  return out;
}

void emit(const StructureDocument& doc, const std::string& out_path) {
  if (out_path.empty())
    std::cout << document_text(doc);
  else
    write_document_file(doc, out_path);
}

void print_lines(const std::vector<AxiomResult>& lines) {
  for (const auto& a : lines) std::cout << "  " << describe(a) << "\n";
}

// properties are classifications, not pass/fail verdicts
void print_properties(const std::vector<AxiomResult>& lines) {
  for (const auto& a : lines) std::cout << "  " << a.axiom << ": " << (a.ok ? "yes" : "no") << "\n";
}

// ---------------------------------------------------------------------------
// verify

// reproducible random probes of the kind's defining identity; returns the
// number of violations found among `probes` samples
int spot_check(const StructureDocument& doc, unsigned seed, int probes) {
  std::mt19937 rng(seed);
  int n = carrier_size(doc);
  auto pick = [&](int k) { return int(rng() % (unsigned)k); };
  int bad = 0;
  for (int i = 0; i < probes; ++i) {
    int a = pick(n), b = pick(n), c = pick(n);
    bool ok = true;
    switch (doc.kind) {
      case DocKind::group: {
        const auto& t = std::get<GroupDoc>(doc.payload).table;
        ok = t(t(a, b), c) == t(a, t(b, c));
        break;
      }
      case DocKind::shelf: {
        const auto& t = std::get<ShelfDoc>(doc.payload).tri;
        ok = t(a, t(b, c)) == t(t(a, b), t(a, c));
        break;
      }
      case DocKind::digroup: {
        const auto& d = std::get<DigroupDoc>(doc.payload);
        ok = d.vdash(d.vdash(a, b), c) == d.vdash(a, d.vdash(b, c)) &&
             d.dashv(d.dashv(a, b), c) == d.dashv(a, d.dashv(b, c)) &&
             d.dashv(d.vdash(a, b), c) == d.vdash(a, d.dashv(b, c));
        break;
      }
      case DocKind::diskew: {
        const auto& d = std::get<DiskewDoc>(doc.payload);
        const auto& vd = d.digroup.vdash;
        // D1 at (a,b,c) needs a |--inverse of a; probe D3 instead, which is
        // inverse-free
        ok = d.circ(vd(a, b), c) == d.circ(d.digroup.dashv(a, b), c);
        break;
      }
      case DocKind::solution: {
        const auto& s = std::get<SolutionDoc>(doc.payload);
        auto lam = [&](int x, int y) { return s.lambda(x, y); };
        auto rho = [&](int y, int x) { return s.rho(y, x); };
        ok = lam(a, lam(b, c)) == lam(lam(a, b), lam(rho(b, a), c));
        break;
      }
      case DocKind::hemipair: {
        const auto& h = std::get<HemiPairDoc>(doc.payload);
        const auto& t = h.shelf.tri;
        // the shelf-action identity psi_{a|>b} psi_a == psi_a psi_b at a
        // random coefficient
        int e = pick(h.esize);
        ok = h.psi[t(a, b)][h.psi[a][e]] == h.psi[a][h.psi[b][e]];
        break;
      }
      case DocKind::avgmap: {
        const auto& av = std::get<AvgMapDoc>(doc.payload);
        const auto& t = av.group.table;
        const auto& f = av.map;
        ok = t(f[a], f[b]) == f[t(f[a], b)] || t(f[a], f[b]) == f[t(a, f[b])];
        break;
      }
    }
    if (!ok) ++bad;
  }
  return bad;
}

int run_verify(const std::string& file, const std::string& kind_arg, bool as_json, unsigned seed) {
  StructureDocument doc = read_document_file(file);
  if (!kind_arg.empty()) {
    auto k = kind_from_string(kind_arg);
    if (!k) throw ParseError("unknown kind \"" + kind_arg + "\"");
    if (*k != doc.kind)
      throw ParseError("document is a " + std::string(to_string(doc.kind)) + ", not a " +
                       kind_arg);
  }
  DocumentReport rep = verify_document(doc);
  const int probes = 32;
  int bad = spot_check(doc, seed, probes);
  if (as_json) {
    json j = report_json(rep);
    j["kind"] = to_string(doc.kind);
    j["n"] = carrier_size(doc);
    j["spot_checks"] = {{"seed", seed}, {"probes", probes}, {"violations", bad}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kind: " << to_string(doc.kind) << "  carrier: " << carrier_size(doc) << "\n";
    std::cout << "axioms:\n";
    print_lines(rep.axioms.axioms);
    if (!rep.properties.empty()) {
      std::cout << "properties:\n";
      print_properties(rep.properties);
    }
    std::cout << "spot checks: " << (probes - bad) << "/" << probes << " random probes ok (seed "
              << seed << ")\n";
    std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  }
  return rep.ok() ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// ybe-check

int run_ybe_check(const std::string& file, bool as_json) {
  StructureDocument doc = read_document_file(file);
  if (doc.kind != DocKind::solution)
    throw ParseError("ybe-check expects a solution document, got " +
                     std::string(to_string(doc.kind)));
  SolutionTable r = to_solution(std::get<SolutionDoc>(doc.payload));
  VerifyReport rep = ybe_report(r);  // internally cross-checked against the braid route
  auto [lnd, rnd] = nondegeneracy(r);
  bool bij = is_bijective(r);
  if (as_json) {
    json j = report_json(rep);
    j["braid"] = rep.ok();
    j["left_nondegenerate"] = lnd;
    j["right_nondegenerate"] = rnd;
    j["bijective"] = bij;
    std::cout << j.dump(2) << "\n";
  } else {
    print_lines(rep.axioms);
    std::cout << "  braid identity on D x D x D: " << (rep.ok() ? "ok" : "FAIL") << "\n";
    std::cout << "  left nondegenerate: " << (lnd ? "yes" : "no")
              << "  right nondegenerate: " << (rnd ? "yes" : "no")
              << "  bijective: " << (bij ? "yes" : "no") << "\n";
    std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  }
  return rep.ok() ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// order

long long direct_pair_order(const SolutionTable& r) {
  return permutation_order(Permutation(r.as_pair_map()));
}

int run_order(const std::string& file, long long bound, bool as_json) {
  StructureDocument doc = read_document_file(file);
  json j{{"kind", to_string(doc.kind)}, {"bound", bound}};
  auto finish = [&](int rc) {
    if (as_json) std::cout << j.dump(2) << "\n";
    return rc;
  };

  switch (doc.kind) {
    case DocKind::shelf: {
      Shelf s = to_shelf(std::get<ShelfDoc>(doc.payload));
      if (!s.rack) {
        j["error"] = "derived map is not bijective (not a rack); no finite order";
        if (!as_json) std::cout << "the derived map is not bijective (not a rack); no finite order\n";
        return finish(kFail);
      }
      long long direct = direct_pair_order(derived_solution(s));
      if (s.n() == 1) {
        j["order"] = direct;
        j["formula"] = "singleton carrier: direct iteration only";
        if (!as_json) std::cout << "order " << direct << " (singleton carrier, direct iteration)\n";
        return finish(kPass);
      }
      DerivedOrder d = derived_order(s, bound);
      if (!d.order) {
        j["exceeds_bound"] = true;
        if (!as_json) std::cout << "M and N searches exceed bound " << bound << "\n";
        return finish(kPass);
      }
      j["M"] = d.M ? json(*d.M) : json(nullptr);
      j["N"] = d.N ? json(*d.N) : json(nullptr);
      j["formula"] = d.case_used;
      j["order"] = *d.order;
      j["direct"] = direct;
      j["cross_check"] = (*d.order == direct);
      if (!as_json) {
        std::cout << "M = " << (d.M ? std::to_string(*d.M) : std::string("none <= bound"))
                  << ", N = " << (d.N ? std::to_string(*d.N) : std::string("none <= bound"))
                  << "\n";
        std::cout << "formula: " << d.case_used << "\n";
        std::cout << "order " << *d.order << "; direct iteration " << direct << " ("
                  << (*d.order == direct ? "agrees" : "DISAGREES") << ")\n";
      }
      return finish(*d.order == direct ? kPass : kFail);
    }

    case DocKind::solution: {
      SolutionTable r = to_solution(std::get<SolutionDoc>(doc.payload));
      if (!is_bijective(r)) {
        j["error"] = "the solution map is not bijective; no finite order";
        if (!as_json) std::cout << "the solution map is not bijective; no finite order\n";
        return finish(kFail);
      }
      long long direct = direct_pair_order(r);
      j["order"] = direct;
      j["formula"] = "direct iteration of the pair map";
      if (!as_json) std::cout << "order " << direct << " (direct iteration)\n";
      return finish(kPass);
    }

    case DocKind::diskew: {
      DiSkewBrace B = to_diskew(std::get<DiskewDoc>(doc.payload));
      auto dec = diskew_decompose(B);
      long long direct = direct_pair_order(diskew_solution(B));
      j["direct"] = direct;
      if (dec.E.size() > 1) {
        auto mp = m_psi(dec.pair.psi, bound);
        if (!mp) {
          j["exceeds_bound"] = true;
          if (!as_json) std::cout << "m_psi search exceeds bound " << bound << "\n";
          return finish(kPass);
        }
        long long q = quotient_exponent(dec.add);
        long long order = 2 * lcm_ll(q, *mp);
        j["exp_G_mod_center"] = q;
        j["m_psi"] = *mp;
        j["formula"] = "2 lcm(exp(G/Z(G)), m_psi)";
        j["order"] = order;
        j["cross_check"] = (order == direct);
        if (!as_json) {
          std::cout << "exp(G/Z(G)) = " << q << ", m_psi = " << *mp << "\n";
          std::cout << "formula: order = 2 lcm(exp(G/Z(G)), m_psi) = " << order << "\n";
          std::cout << "direct iteration " << direct << " ("
                    << (order == direct ? "agrees" : "DISAGREES") << ")\n";
        }
        return finish(order == direct ? kPass : kFail);
      }
      // singleton bar-unit set: the closed form's hypothesis fails; report
      // the direct order (and the conjugation-quandle formula when lambda is
      // trivial, where it applies)
      j["order"] = direct;
      j["formula"] = "|E(D)| = 1: direct iteration";
      bool lam_trivial = true;
      for (int a = 0; a < B.n() && lam_trivial; ++a)
        for (int b = 0; b < B.n() && lam_trivial; ++b) lam_trivial = B.lambda(a, b) == b;
      if (!as_json) std::cout << "|E(D)| = 1; order " << direct << " (direct iteration)\n";
      if (lam_trivial && B.n() > 1) {
        long long cf = conj_order_formula(dec.add);
        j["conj_formula"] = cf;
        j["cross_check"] = (cf == direct);
        if (!as_json)
          std::cout << "trivial lambda: conjugation-quandle formula 2 exp(G/Z(G)) = " << cf << " ("
                    << (cf == direct ? "agrees" : "DISAGREES") << ")\n";
        return finish(cf == direct ? kPass : kFail);
      }
      return finish(kPass);
    }

    case DocKind::hemipair: {
      HemiPair H = to_hemipair(std::get<HemiPairDoc>(doc.payload));
      HemiOrder ho = hemi_order(H, bound);  // throws invalid_argument if |E| <= 1 etc.
      if (!ho.order) {
        j["exceeds_bound"] = true;
        if (!as_json) std::cout << "order searches exceed bound " << bound << "\n";
        return finish(kPass);
      }
      long long direct = direct_pair_order(hemi_solution(H));
      j["m_shelf"] = *ho.m_shelf;
      j["m_psi"] = *ho.m_psi;
      j["formula"] = "2 lcm(m_shelf, m_psi)";
      j["order"] = *ho.order;
      j["direct"] = direct;
      j["cross_check"] = (*ho.order == direct);
      if (!as_json) {
        std::cout << "m_shelf = " << *ho.m_shelf << ", m_psi = " << *ho.m_psi << "\n";
        std::cout << "formula: order = 2 lcm(m_shelf, m_psi) = " << *ho.order << "\n";
        std::cout << "direct iteration " << direct << " ("
                  << (*ho.order == direct ? "agrees" : "DISAGREES") << ")\n";
      }
      return finish(*ho.order == direct ? kPass : kFail);
    }

    default:
      throw ParseError("order applies to shelf, solution, diskew, or hemipair documents, got " +
                       std::string(to_string(doc.kind)));
  }
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string recipe, out;
  std::string group_file, digroup_file, shelf_file, diskew_file, hemipair_file;
  std::string name;
  std::string f_csv, g_csv, h_csv, map_csv;
  std::string twist_rows, psi_rows, sigma_rows, action_rows, circ_rows;
  int n = 0, esize = 0;
  bool right_side = false;
};

GroupTable need_group(const ConstructArgs& a) {
  if (a.group_file.empty()) throw ParseError(a.recipe + " needs --group <file>");
  StructureDocument doc = read_document_file(a.group_file);
  if (doc.kind != DocKind::group)
    throw ParseError("--group: expected a group document, got " +
                     std::string(to_string(doc.kind)));
  return to_group(std::get<GroupDoc>(doc.payload));
}

GDigroup need_digroup(const ConstructArgs& a) {
  if (a.digroup_file.empty()) throw ParseError(a.recipe + " needs --digroup <file>");
  StructureDocument doc = read_document_file(a.digroup_file);
  if (doc.kind != DocKind::digroup)
    throw ParseError("--digroup: expected a digroup document, got " +
                     std::string(to_string(doc.kind)));
  return to_digroup(std::get<DigroupDoc>(doc.payload));
}

Shelf need_shelf(const ConstructArgs& a) {
  if (a.shelf_file.empty()) throw ParseError(a.recipe + " needs --shelf <file>");
  StructureDocument doc = read_document_file(a.shelf_file);
  if (doc.kind != DocKind::shelf)
    throw ParseError("--shelf: expected a shelf document, got " +
                     std::string(to_string(doc.kind)));
  return to_shelf(std::get<ShelfDoc>(doc.payload));
}

DiSkewBrace need_diskew(const ConstructArgs& a) {
  if (a.diskew_file.empty()) throw ParseError(a.recipe + " needs --diskew <file>");
  StructureDocument doc = read_document_file(a.diskew_file);
  if (doc.kind != DocKind::diskew)
    throw ParseError("--diskew: expected a diskew document, got " +
                     std::string(to_string(doc.kind)));
  return to_diskew(std::get<DiskewDoc>(doc.payload));
}

HemiPair need_hemipair(const ConstructArgs& a) {
  if (a.hemipair_file.empty()) throw ParseError(a.recipe + " needs --hemipair <file>");
  StructureDocument doc = read_document_file(a.hemipair_file);
  if (doc.kind != DocKind::hemipair)
    throw ParseError("--hemipair: expected a hemipair document, got " +
                     std::string(to_string(doc.kind)));
  return to_hemipair(std::get<HemiPairDoc>(doc.payload));
}

int run_construct(const ConstructArgs& a) {
  const std::string& r = a.recipe;
  StructureDocument doc;

  if (r == "group") {
    if (a.name.empty()) throw ParseError("group needs --name (z2..z8, v4, s3, d4, q8)");
    for (auto& [name, G] : group_corpus())
      if (name == a.name) {
        doc = from_group(G);
        emit(doc, a.out);
        return kPass;
      }
    throw ParseError("unknown group name \"" + a.name + "\"");
  }
  if (r == "group-digroup") {
    doc = from_digroup(group_as_digroup(need_group(a)));
  } else if (r == "action-digroup") {
    GroupTable G = need_group(a);
    if (a.esize < 1) throw ParseError("action-digroup needs --esize >= 1");
    if (a.action_rows.empty()) throw ParseError("action-digroup needs --action <rows>");
    auto psi = to_perms(parse_rows(a.action_rows, "--action"), "--action");
    doc = from_digroup(from_group_action(G, a.esize, psi));
  } else if (r == "pair-digroup") {
    GroupTable G = need_group(a);
    if (a.f_csv.empty() || a.g_csv.empty()) throw ParseError("pair-digroup needs --f and --g");
    auto P = AveragingPair::verified(G, parse_csv(a.f_csv, "--f"), parse_csv(a.g_csv, "--g"));
    doc = from_digroup(digroup_from_pair(P));
  } else if (r == "fg-digroup") {
    GroupTable G = need_group(a);
    if (a.f_csv.empty() || a.g_csv.empty()) throw ParseError("fg-digroup needs --f and --g");
    doc = from_digroup(fg_commuting_digroup(G, parse_csv(a.f_csv, "--f"), parse_csv(a.g_csv, "--g")));
  } else if (r == "trivial-quandle") {
    if (a.n < 1) throw ParseError("trivial-quandle needs --n >= 1");
    doc = from_shelf(trivial_quandle(a.n));
  } else if (r == "constant-shelf") {
    if (a.map_csv.empty()) throw ParseError("constant-shelf needs --map");
    doc = from_shelf(constant_shelf(parse_csv(a.map_csv, "--map")));
  } else if (r == "conj-quandle") {
    doc = from_shelf(conj_quandle(need_group(a)));
  } else if (r == "core-quandle") {
    doc = from_shelf(core_quandle(need_group(a)));
  } else if (r == "conj-rack") {
    doc = from_shelf(conjugation_rack(need_digroup(a)));
  } else if (r == "trivial-brace") {
    doc = from_diskew(trivial_diskew(need_digroup(a)));
  } else if (r == "almost-trivial-brace") {
    doc = from_diskew(almost_trivial_diskew(need_digroup(a)));
  } else if (r == "skew-brace") {
    GroupTable G = need_group(a);
    if (a.circ_rows.empty()) throw ParseError("skew-brace needs --circ <rows>");
    doc = from_diskew(skew_brace(G, BinOpTable::from_rows(parse_rows(a.circ_rows, "--circ"))));
  } else if (r == "avg-brace") {
    GroupTable G = need_group(a);
    if (a.f_csv.empty() || a.g_csv.empty() || a.h_csv.empty())
      throw ParseError("avg-brace needs --f, --g, and --h");
    auto P = AveragingPair::verified(G, parse_csv(a.f_csv, "--f"), parse_csv(a.g_csv, "--g"));
    auto h = parse_csv(a.h_csv, "--h");
    doc = from_diskew(a.right_side ? diskew_from_right_operator(P, h)
                                   : diskew_from_left_operator(P, h));
  } else if (r == "derived-solution") {
    doc = from_solution(derived_solution(need_shelf(a)));
  } else if (r == "twist-solution") {
    Shelf s = need_shelf(a);
    if (a.twist_rows.empty()) throw ParseError("twist-solution needs --twist <rows>");
    auto phi = to_perms(parse_rows(a.twist_rows, "--twist"), "--twist");
    doc = from_solution(solution_from_twist(Twist{std::move(s), std::move(phi)}));
  } else if (r == "diskew-solution") {
    doc = from_solution(diskew_solution(need_diskew(a)));
  } else if (r == "hemi-solution") {
    doc = from_solution(hemi_solution(need_hemipair(a)));
  } else if (r == "flip") {
    if (a.n < 1) throw ParseError("flip needs --n >= 1");
    doc = from_solution(flip_solution(a.n));
  } else if (r == "hemipair") {
    Shelf s = need_shelf(a);
    if (a.twist_rows.empty() || a.psi_rows.empty() || a.sigma_rows.empty())
      throw ParseError("hemipair needs --twist, --psi, and --sigma");
    auto phi = to_perms(parse_rows(a.twist_rows, "--twist"), "--twist");
    auto psi = to_perms(parse_rows(a.psi_rows, "--psi"), "--psi");
    auto sigma = to_perms(parse_rows(a.sigma_rows, "--sigma"), "--sigma");
    doc = from_hemipair(HemiPair::verified(Twist{std::move(s), std::move(phi)}, std::move(psi),
                                           std::move(sigma)));
  } else if (r == "avgmap") {
    GroupTable G = need_group(a);
    if (a.map_csv.empty()) throw ParseError("avgmap needs --map");
    doc = from_avgmap(G, parse_csv(a.map_csv, "--map"));
    DocumentReport rep = verify_document(doc);
    if (!rep.ok()) throw VerificationError(std::move(rep.axioms));
  } else {
    throw ParseError("unknown recipe \"" + r + "\"");
  }

  emit(doc, a.out);
  return kPass;
}

// ---------------------------------------------------------------------------
// enumerate

int run_enumerate(const std::string& what, const std::string& group_file, int n,
                  bool idempotent_endo, bool left_only, bool right_only, bool bijective_only) {
  auto stream = [](const StructureDocument& d) { std::cout << emit_document(d).dump() << "\n"; };
  long long count = 0;

  if (what == "avg") {
    if (group_file.empty()) throw ParseError("enumerate avg needs --group <file>");
    StructureDocument gd = read_document_file(group_file);
    if (gd.kind != DocKind::group) throw ParseError("--group: expected a group document");
    GroupTable G = to_group(std::get<GroupDoc>(gd.payload));
    std::vector<std::vector<int>> maps;
    if (idempotent_endo)
      maps = enumerate_idempotent_endos(G);
    else if (left_only)
      maps = enumerate_left_averaging(G);
    else if (right_only)
      maps = enumerate_right_averaging(G);
    else
      maps = enumerate_averaging(G);
    for (const auto& f : maps) {
      stream(from_avgmap(G, f));
      ++count;
    }
  } else if (what == "racks" || what == "shelves") {
    if (n < 1) throw ParseError("enumerate " + what + " needs --n >= 1");
    for (const Shelf& s : what == "racks" ? enumerate_racks(n) : enumerate_shelves(n)) {
      stream(from_shelf(s));
      ++count;
    }
  } else if (what == "solutions") {
    if (n < 1) throw ParseError("enumerate solutions needs --n >= 1");
    for (const SolutionTable& r : enumerate_left_nd_solutions(n)) {
      if (bijective_only && !is_bijective(r)) continue;
      stream(from_solution(r));
      ++count;
    }
  } else {
    throw ParseError("unknown enumeration \"" + what + "\" (avg, racks, shelves, solutions)");
  }
  std::cerr << count << " " << (count == 1 ? "document" : "documents") << "\n";
  return kPass;
}

// ---------------------------------------------------------------------------
// decompose

int run_decompose(const std::string& diskew_file, const std::string& out_dir) {
  if (diskew_file.empty()) throw ParseError("decompose needs --diskew <file>");
  StructureDocument doc = read_document_file(diskew_file);
  if (doc.kind != DocKind::diskew)
    throw ParseError("--diskew: expected a diskew document, got " +
                     std::string(to_string(doc.kind)));
  DiSkewBrace B = to_diskew(std::get<DiskewDoc>(doc.payload));
  DiskewDecomposition dec = diskew_decompose(B);

  StructureDocument skew = from_diskew(dec.skew);
  StructureDocument pair = from_hemipair(dec.pair);
  const int ne = int(dec.E.size());
  json fmap = json::array();
  for (int a = 0; a < B.n(); ++a)
    fmap.push_back(json::array({dec.F[a] / ne, dec.F[a] % ne}));

  json bundle{{"G", dec.G},
              {"E", dec.E},
              {"skew_brace", emit_document(skew)},
              {"hemi_pair", emit_document(pair)},
              {"F", fmap},
              {"brace_solution", emit_document(from_solution(dec.brace_solution))},
              {"product_solution", emit_document(from_solution(dec.product_solution))}};
  std::cout << bundle.dump(2) << "\n";

  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    write_document_file(skew, (fs::path(out_dir) / "skew-brace.json").string());
    write_document_file(pair, (fs::path(out_dir) / "hemi-pair.json").string());
    std::ofstream fout(fs::path(out_dir) / "equivalence.json");
    fout << json{{"G", dec.G}, {"E", dec.E}, {"F", fmap}}.dump(2) << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------------------

int run_export(const std::string& file, const std::string& out) {
  StructureDocument doc = read_document_file(file);
  emit(doc, out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra workbench: digroups, di-skew braces, racks, averaging operators, "
               "and set-theoretic Yang-Baxter solutions"};
  app.require_subcommand(1);

  std::string file, kind_arg, out, out_dir;
  bool as_json = false;
  unsigned seed = 0;
  long long bound = -1;

  auto* verify = app.add_subcommand("verify", "run a document's full axiom ledger");
  verify->add_option("file", file, "structure document")->required();
  verify->add_option("--kind", kind_arg, "assert the document kind");
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->add_option("--seed", seed, "seed for the randomized spot checks");

  auto* ybe_check = app.add_subcommand("ybe-check", "braid/YBE verdict for a solution document");
  ybe_check->add_option("file", file, "solution document")->required();
  ybe_check->add_flag("--json", as_json, "machine-readable report");

  auto* order = app.add_subcommand("order", "order of the induced solution, formula vs iteration");
  order->add_option("file", file, "shelf, solution, diskew, or hemipair document")->required();
  order->add_option("--bound", bound, "search bound (default $YBE_FORGE_BOUND or 64)");
  order->add_flag("--json", as_json, "machine-readable report");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a structure document from a recipe");
  construct->set_help_flag("--help", "print help");  // frees -h/--h for the operator map
  construct->add_option("recipe", ca.recipe,
                        "group | group-digroup | action-digroup | pair-digroup | fg-digroup | "
                        "trivial-quandle | constant-shelf | conj-quandle | core-quandle | "
                        "conj-rack | trivial-brace | almost-trivial-brace | skew-brace | "
                        "avg-brace | derived-solution | twist-solution | diskew-solution | "
                        "hemi-solution | flip | hemipair | avgmap")
      ->required();
  construct->add_option("--group", ca.group_file, "group document");
  construct->add_option("--digroup", ca.digroup_file, "digroup document");
  construct->add_option("--shelf", ca.shelf_file, "shelf document");
  construct->add_option("--diskew", ca.diskew_file, "diskew document");
  construct->add_option("--hemipair", ca.hemipair_file, "hemipair document");
  construct->add_option("--name", ca.name, "corpus group name (z2..z8, v4, s3, d4, q8)");
  construct->add_option("--f", ca.f_csv, "map as comma-separated images");
  construct->add_option("--g", ca.g_csv, "map as comma-separated images");
  construct->add_option("--h", ca.h_csv, "map as comma-separated images");
  construct->add_option("--map", ca.map_csv, "map as comma-separated images");
  construct->add_option("--twist", ca.twist_rows, "rows: JSON [[..]] or \"r0;r1;...\"");
  construct->add_option("--psi", ca.psi_rows, "rows: JSON [[..]] or \"r0;r1;...\"");
  construct->add_option("--sigma", ca.sigma_rows, "rows: JSON [[..]] or \"r0;r1;...\"");
  construct->add_option("--action", ca.action_rows, "rows: JSON [[..]] or \"r0;r1;...\"");
  construct->add_option("--circ", ca.circ_rows, "rows: JSON [[..]] or \"r0;r1;...\"");
  construct->add_option("--n", ca.n, "carrier size");
  construct->add_option("--esize", ca.esize, "coefficient carrier size");
  construct->add_flag("--right", ca.right_side, "use the right-operator construction");
  construct->add_option("--out", ca.out, "write the document here instead of stdout");

  std::string what;
  int en = 0;
  bool idempotent_endo = false, left_only = false, right_only = false, bijective_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "stream documents as JSON lines");
  enumerate->add_option("what", what, "avg | racks | shelves | solutions")->required();
  enumerate->add_option("--group", file, "group document (for avg)");
  enumerate->add_option("--n", en, "carrier size (for racks/shelves/solutions)");
  enumerate->add_flag("--idempotent-endo", idempotent_endo, "idempotent endomorphisms only");
  enumerate->add_flag("--left", left_only, "left averaging maps only");
  enumerate->add_flag("--right", right_only, "right averaging maps only");
  enumerate->add_flag("--bijective", bijective_only, "bijective solutions only");

  auto* decompose = app.add_subcommand("decompose", "split a di-skew brace into skew brace + hemi pair");
  decompose->add_option("--diskew", file, "diskew document")->required();
  decompose->add_option("--out-dir", out_dir, "also write component files here");

  auto* exportc = app.add_subcommand("export", "canonical re-emission of a document");
  exportc->add_option("file", file, "structure document")->required();
  exportc->add_option("--out", out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (bound < 0) bound = default_bound();
    if (verify->parsed()) return run_verify(file, kind_arg, as_json, seed);
    if (ybe_check->parsed()) return run_ybe_check(file, as_json);
    if (order->parsed()) return run_order(file, bound, as_json);
    if (construct->parsed()) return run_construct(ca);
    if (enumerate->parsed())
      return run_enumerate(what, file, en, idempotent_endo, left_only, right_only, bijective_only);
    if (decompose->parsed()) return run_decompose(file, out_dir);
    if (exportc->parsed()) return run_export(file, out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed:\n";
    for (const auto& a : e.report.axioms) std::cerr << "  " << describe(a) << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kFail;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency check failed: " << e.what() << "\n";
    return kFail;
  }
  return kBadInput;
}
