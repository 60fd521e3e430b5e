#include "hecke/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hecke/beta_set.hpp"

namespace hecke {

using nlohmann::json;

namespace {

json regime_fields(json j, const HeckeParams& p) {
  j["regime"] = to_string(p);
  if (p.regime == Regime::InfPower || p.regime == Regime::TwoPower || p.regime == Regime::Finite) {
    j["r"] = p.r;
  } else {
    j["r"] = nullptr;
  }
  j["char"] = p.characteristic;
  return j;
}

std::string residue_label(int i) { return i > 0 ? "+1" : "-1"; }

json chain_json(const ChainOutcome& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"bipartition", to_string(s.before)}, {"removed_residue", s.removed_residue}});
  }
  json j{{"start_residue", c.start_residue},
         {"steps", steps},
         {"stopped_at", to_string(c.last)},
         {"terminal", c.terminal}};
  if (c.terminal) {
    j["terminal_partition"] = to_string(c.terminal_partition);
    j["side"] = c.terminal_side;
  }
  return j;
}

std::string chain_text(const ChainOutcome& c) {
  std::string out = "chain from " + residue_label(c.start_residue) + ": ";
  for (const auto& s : c.steps) out += to_string(s.before) + " -[" + residue_label(s.removed_residue) + "]-> ";
  out += to_string(c.last);
  if (c.terminal) {
    out += "  terminal " + to_string(c.terminal_partition) + " (side " + std::to_string(c.terminal_side) + ")";
  } else {
    out += "  stuck";
  }
  return out;
}

struct WitnessRender {
  json j;
  std::string text;
};

WitnessRender render_witness(const Witness& w) {
  WitnessRender out{nullptr, {}};
  if (const auto* s = std::get_if<ShapeWitness>(&w)) {
    out.j = {{"kind", "shape"}, {"signature", to_string(s->signature)}, {"matches", s->shape.matches}};
    out.text = "signature " + to_string(s->signature);
    if (s->shape.matches) {
      out.j["a"] = s->shape.a;
      out.j["b"] = s->shape.b;
      out.j["c"] = s->shape.c;
      out.j["orientation"] = to_string(s->shape.orientation);
      out.text += " matches " + to_string(s->shape.orientation) + " (a=" + std::to_string(s->shape.a) +
                  ", b=" + std::to_string(s->shape.b) + ", c=" + std::to_string(s->shape.c) + ")";
    } else {
      out.text += " has no X^a Y^b X^c reading with a+c<=b";
    }
  } else if (const auto* c = std::get_if<ChainWitness>(&w)) {
    json chains = json::array();
    for (const auto& ch : c->chains) {
      chains.push_back(chain_json(ch));
      if (!out.text.empty()) out.text += '\n';
      out.text += chain_text(ch);
    }
    out.j = {{"kind", "chain"}, {"chains", chains}};
    if (c->oracle_answer) {
      out.j["oracle"] = to_string(*c->oracle_answer);
      out.text += "\ntype-A oracle: " + to_string(*c->oracle_answer);
    } else {
      out.j["oracle"] = nullptr;
    }
  } else if (const auto* sp = std::get_if<SplitWitness>(&w)) {
    out.j = {{"kind", "split"}, {"first", to_string(sp->first)}, {"second", to_string(sp->second)}};
    out.text = "components: " + to_string(sp->first) + ", " + to_string(sp->second);
  }
  return out;
}

}  // namespace

Report report_classify(const Bipartition& b, const HeckeParams& p, const Verdict& v, bool with_witness) {
  json j{{"subject", to_string(b)}};
  j = regime_fields(std::move(j), p);
  j["verdict"] = to_string(v.kind);
  if (!v.reason.empty()) j["reason"] = v.reason;
  std::string text = to_string(v.kind);
  if (!v.reason.empty()) text += " (" + v.reason + ")";
  if (with_witness) {
    auto w = render_witness(v.witness);
    j["witness"] = w.j;
    if (!w.text.empty()) text += "\n" + w.text;
  } else {
    j["witness"] = nullptr;
  }
  return {text + "\n", j.dump()};
}

Report report_signature(const Bipartition& b, const SignatureContext& ctx) {
  const bool dominant = is_dominant(ctx.signs);
  std::string text = to_string(ctx.signs) + "\n";
  std::string pts;
  json points = json::array();
  for (int m : ctx.points) {
    if (!pts.empty()) pts += ' ';
    pts += std::to_string(m);
    points.push_back(m);
  }
  text += "points: " + (pts.empty() ? std::string("(none)") : pts) + "\n";
  text += std::string("dominant: ") + (dominant ? "yes" : "no");
  json j{{"subject", to_string(b)},
         {"r", ctx.r},
         {"charge", ctx.charge},
         {"signature", to_string(ctx.signs)},
         {"points", points},
         {"dominant", dominant}};
  if (dominant) {
    const auto iota = iota_s(ctx.signs);
    text += "\niota_s: " + to_cycle_string(iota);
    j["iota_s"] = to_cycle_string(iota);
    j["iota_s_map"] = iota.map();
  } else {
    j["iota_s"] = nullptr;
  }
  return {text + "\n", j.dump()};
}

Report report_constituents(const DecompRow& row) {
  json factors = json::array();
  std::string text;
  for (const auto& f : row.factors) {
    factors.push_back(to_string(f));
    text += to_string(f) + "\n";
  }
  json j{{"subject", to_string(row.subject)}, {"r", row.r}, {"factors", factors}};
  return {text, j.dump()};
}

Report report_simples_in(const Bipartition& reg, int r, const SignatureContext& ctx,
                         const std::vector<Involution>& involutions, const std::vector<Bipartition>& spechts) {
  json list = json::array();
  std::string text;
  for (std::size_t k = 0; k < spechts.size(); ++k) {
    list.push_back({{"bipartition", to_string(spechts[k])},
                    {"involution", to_cycle_string(involutions[k])},
                    {"map", involutions[k].map()}});
    text += to_string(spechts[k]) + "  " + to_cycle_string(involutions[k]) + "\n";
  }
  json j{{"subject", to_string(reg)}, {"r", r}, {"signature", to_string(ctx.signs)}, {"spechts", list}};
  return {text, j.dump()};
}

namespace {

std::pair<int, int> default_window(const std::vector<BetaSet>& rows) {
  int lo = 0;
  int hi = 0;
  bool first = true;
  for (const auto& b : rows) {
    const int l = b.dense_below() - 2;
    const int h = b.upper_bound() + 1;
    lo = first ? l : std::min(lo, l);
    hi = first ? h : std::max(hi, h);
    first = false;
  }
  return {lo, hi};
}

}  // namespace

Report report_abacus(const Bipartition& b, int r, std::optional<int> lo, std::optional<int> hi) {
  const auto ctx = signature(b, r);
  std::vector<BetaSet> rows{ctx.first, ctx.second};
  auto [dlo, dhi] = default_window(rows);
  const int l = lo.value_or(dlo);
  const int h = hi.value_or(dhi);
  std::string text = abacus_render(rows, l, h);
  // Column width matches abacus_render.
  std::size_t width = 1;
  for (int m = l; m <= h; ++m) width = std::max(width, std::to_string(m).size());
  std::string marks;
  for (int m = l; m <= h; ++m) {
    auto it = std::find(ctx.points.begin(), ctx.points.end(), m);
    char c = ' ';
    if (it != ctx.points.end()) c = static_cast<char>(ctx.signs[static_cast<std::size_t>(it - ctx.points.begin())]);
    marks += std::string(width, ' ') + c;
  }
  while (!marks.empty() && marks.back() == ' ') marks.pop_back();
  text += marks + "\n";
  json rows_json = json::array();
  for (const auto& row : rows) {
    std::string beads;
    for (int m = l; m <= h; ++m) beads += row.contains(m) ? 'o' : '.';
    rows_json.push_back({{"charge", row.charge()}, {"shape", to_string(row.shape())}, {"beads", beads}});
  }
  json j{{"subject", to_string(b)}, {"r", r}, {"lo", l}, {"hi", h}, {"rows", rows_json},
         {"signature", to_string(ctx.signs)}};
  return {text, j.dump()};
}

Report report_abacus(const Partition& lambda, int charge, std::optional<int> lo, std::optional<int> hi) {
  std::vector<BetaSet> rows{beta_set(lambda, charge)};
  auto [dlo, dhi] = default_window(rows);
  const int l = lo.value_or(dlo);
  const int h = hi.value_or(dhi);
  std::string beads;
  for (int m = l; m <= h; ++m) beads += rows[0].contains(m) ? 'o' : '.';
  json j{{"subject", to_string(lambda)}, {"charge", charge}, {"lo", l}, {"hi", h},
         {"rows", json::array({{{"charge", charge}, {"shape", to_string(lambda)}, {"beads", beads}}})}};
  return {abacus_render(rows, l, h), j.dump()};
}

Report report_blocks(const std::vector<Bipartition>& items, const HeckeParams& p) {
  std::map<std::vector<Residue>, int> block_ids;
  json entries = json::array();
  std::string text;
  for (const auto& b : items) {
    const auto res = residue_multiset(b, p);
    auto [it, inserted] = block_ids.try_emplace(res, static_cast<int>(block_ids.size()));
    json residues = json::array();
    std::string label;
    for (const auto& x : res) {
      residues.push_back(to_string(x));
      if (!label.empty()) label += ' ';
      label += to_string(x);
    }
    entries.push_back({{"subject", to_string(b)}, {"residues", residues}, {"block", it->second}});
    text += to_string(b) + "  block " + std::to_string(it->second) + "  {" + label + "}\n";
  }
  text += "blocks: " + std::to_string(block_ids.size()) + "\n";
  json j{{"entries", entries}, {"blocks", block_ids.size()}};
  j = regime_fields(std::move(j), p);
  return {text, j.dump()};
}

Report report_typea(const CanonicalBasis& basis, const TypeA2Oracle& oracle) {
  std::vector<Partition> rows = partitions(basis.n);
  std::reverse(rows.begin(), rows.end());
  std::vector<Partition> cols(basis.regular.rbegin(), basis.regular.rend());

  json jcols = json::array();
  for (const auto& c : cols) jcols.push_back(to_string(c));
  json jrows = json::array();

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> heads;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    json at_v = json::array();
    json at_one = json::array();
    for (const auto& c : cols) {
      const auto d = basis.entry(row, c);
      line.push_back(d.is_zero() ? "." : to_string(d));
      at_v.push_back(to_string(d));
      at_one.push_back(d.at_one());
    }
    const auto answer = oracle.query(row);
    jrows.push_back({{"partition", to_string(row)}, {"entries", at_v}, {"at_one", at_one}, {"irreducible", to_string(answer)}});
    heads.push_back(to_string(row));
    line.push_back(to_string(answer));
    cells.push_back(std::move(line));
  }

  std::size_t head_w = 1;
  for (const auto& h : heads) head_w = std::max(head_w, h.size());
  std::vector<std::size_t> widths(cols.size() + 1, 1);
  for (std::size_t c = 0; c < cols.size(); ++c) widths[c] = std::max<std::size_t>(1, to_string(cols[c]).size());
  widths[cols.size()] = std::string("oracle").size();
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };

  std::ostringstream text;
  text << "decomposition matrix at v (n=" << basis.n << ", e=2)\n";
  text << pad("", head_w);
  for (std::size_t c = 0; c < cols.size(); ++c) text << "  " << pad(to_string(cols[c]), widths[c]);
  text << "  oracle(char " << oracle.characteristic() << ")\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    text << pad(heads[r], head_w);
    for (std::size_t c = 0; c < cols.size(); ++c) text << "  " << pad(cells[r][c], widths[c]);
    text << "  " << cells[r].back() << "\n";
  }
  text << "\ndecomposition matrix at v=1\n";
  text << pad("", head_w);
  for (std::size_t c = 0; c < cols.size(); ++c) text << "  " << pad(to_string(cols[c]), widths[c]);
  text << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    text << pad(heads[r], head_w);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto v1 = basis.entry(rows[r], cols[c]).at_one();
      text << "  " << pad(v1 == 0 ? "." : std::to_string(v1), widths[c]);
    }
    text << "\n";
  }
  std::string trimmed;
  std::istringstream lines(text.str());
  for (std::string l; std::getline(lines, l);) {
    l.erase(l.find_last_not_of(' ') + 1);
    trimmed += l + "\n";
  }
  json j{{"n", basis.n}, {"e", 2}, {"char", oracle.characteristic()}, {"columns", jcols}, {"rows", jrows}};
  return {trimmed, j.dump()};
}

Report report_parity(const Bipartition& b, int parity, const ParitySweep& sweep) {
  std::string text = std::string(sweep.irreducible_for_all ? "true" : "false") + "\n";
  text += "window: [" + std::to_string(sweep.window_lo) + ", " + std::to_string(sweep.window_hi) + "]";
  if (sweep.first_failure) text += "\nfirst failure: t=" + std::to_string(*sweep.first_failure);
  json j{{"subject", to_string(b)},
         {"parity", parity},
         {"all_irreducible", sweep.irreducible_for_all},
         {"window", {sweep.window_lo, sweep.window_hi}},
         {"first_failure", sweep.first_failure ? json(*sweep.first_failure) : json(nullptr)}};
  return {text + "\n", j.dump()};
}

}  // namespace hecke
