#include "trank/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace trank {

namespace {

long long to_int64(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer too large for JSON serialisation");
  return static_cast<long long>(v);
}

}  // namespace

Json word_to_json(const Word& w, std::span<const std::string> names) {
  return to_text(w, names);
}

Json character_to_json(const Character& c, std::span<const std::string> names) {
  Json out = Json::object();
  for (std::size_t i = 0; i < c.values.size(); ++i) out[names[i]] = c.values[i];
  return out;
}

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_int64(c)}));
  return out;
}

Json laurent_matrix_to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(laurent_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

Json abelian_to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const BigInt& d : g.torsion) torsion.push_back(to_int64(d));
  return Json{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

Json fake_hnn_to_json(const FakeHnn& f) {
  Json d_gens = Json::array();
  for (std::size_t i = 0; i < f.d_count; ++i) d_gens.push_back(f.names[1 + i]);
  Json c_gens = Json::array();
  for (std::size_t j = 0; j < f.c_count; ++j) c_gens.push_back(f.names[1 + f.d_count + j]);
  Json relators = Json::array();
  for (const Word& r : f.relators) relators.push_back(to_text(r, f.names));
  Json conj = Json::array();
  for (const Word& w : f.conj_images) conj.push_back(to_text(w, f.names));
  Json trace = Json::array();
  for (const TietzeStep& step : f.trace) {
    Json record{{"step", to_string(step.kind)}};
    if (!step.name.empty()) record["generator"] = step.name;
    if (!step.word_text.empty()) record["word"] = step.word_text;
    if (step.relator_index >= 0) record["relator"] = step.relator_index;
    trace.push_back(std::move(record));
  }
  return Json{{"stable", f.names[0]},
              {"d_gens", std::move(d_gens)},
              {"c_gens", std::move(c_gens)},
              {"relators", std::move(relators)},
              {"conj_relations", std::move(conj)},
              {"trace", std::move(trace)}};
}

Json hnn_to_json(const HnnData& h, std::span<const std::string> original_names) {
  Json a = Json::array();
  for (const Word& w : h.a_gens) a.push_back(to_text(w, original_names));
  Json b = Json::array();
  for (const Word& w : h.b_gens) b.push_back(to_text(w, original_names));
  // Alpha images are spelled over the B list; name them b1, b2, ...
  std::vector<std::string> b_names;
  for (std::size_t i = 0; i < h.b_gens.size(); ++i)
    b_names.push_back("b" + std::to_string(i + 1));
  Json alpha = Json::array();
  for (const Word& w : h.alpha_images) alpha.push_back(to_text(w, b_names));
  return Json{{"stable", to_text(h.stable, original_names)},
              {"A_gens", std::move(a)},
              {"B_gens", std::move(b)},
              {"alpha_images", std::move(alpha)}};
}

Json novikov_certificate_to_json(const NovikovCertificate& c) {
  return Json{{"generators", c.generators},
              {"rank_d1", c.rank_d1},
              {"rank_d2", c.rank_d2},
              {"b1", c.b1}};
}

Json rank_bounds_to_json(const RankBounds& rb) {
  return Json{{"lower", rb.lower},
              {"upper", rb.upper},
              {"exact", rb.exact},
              {"lower_certificate", novikov_certificate_to_json(rb.lower_certificate)},
              {"upper_certificate", fake_hnn_to_json(rb.upper_certificate)}};
}

Json sigma_report_to_json(const SigmaBallReport& r, std::span<const std::string> names) {
  Json witnesses = Json::array();
  for (const Word& w : r.witnesses) witnesses.push_back(to_text(w, names));
  return Json{{"radius", r.radius},
              {"vertices", r.total_vertices},
              {"sublevel", r.sublevel_vertices},
              {"components", r.components},
              {"identity_component", r.identity_component_size},
              {"witnesses", std::move(witnesses)},
              {"verdict", to_string(r.verdict)},
              {"heuristic", true}};
}

}  // namespace trank
