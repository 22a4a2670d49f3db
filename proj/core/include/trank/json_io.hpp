#pragma once

#include <nlohmann/json.hpp>

#include "trank/abelian.hpp"
#include "trank/magnus.hpp"
#include "trank/novikov.hpp"
#include "trank/presentation.hpp"
#include "trank/sigma.hpp"

namespace trank {

using Json = nlohmann::ordered_json;

/// Words render as strings in the presentation grammar; the ambient name
/// table decides spelling.
Json word_to_json(const Word& w, std::span<const std::string> names);

/// Character as an object keyed by generator name.
Json character_to_json(const Character& c, std::span<const std::string> names);

Json laurent_to_json(const LaurentPoly& p);
Json laurent_matrix_to_json(const LaurentMatrix& m);
Json abelian_to_json(const AbelianGroup& g);
Json fake_hnn_to_json(const FakeHnn& f);

/// HNN data serialises A and B generators as words in `original_names` and
/// alpha images as words over the B generator list.
Json hnn_to_json(const HnnData& h, std::span<const std::string> original_names);

Json novikov_certificate_to_json(const NovikovCertificate& c);
Json rank_bounds_to_json(const RankBounds& rb);
Json sigma_report_to_json(const SigmaBallReport& r, std::span<const std::string> names);

}  // namespace trank
