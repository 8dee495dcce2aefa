#include "kdp/json_io.hpp"

#include "kdp/error.hpp"

namespace kdp {

Json to_json(NullExpression const& expr, Presentation const& p) {
  Json out = Json::array();
  for (auto const& t : expr) {
    out.push_back(
        Json{{"conj", p.format(t.conjugator)}, {"rel", t.relator}, {"sign", t.sign}});
  }
  return out;
}

NullExpression null_expression_from_json(Json const& j, Presentation const& p) {
  if (!j.is_array()) {
    throw DomainError("null expression must be a JSON array");
  }
  NullExpression expr;
  for (auto const& item : j) {
    if (!item.is_object() || !item.contains("conj") || !item.contains("rel") ||
        !item.contains("sign")) {
      throw DomainError("null expression terms need conj, rel and sign");
    }
    NullTerm t;
    t.conjugator = p.parse_word(item.at("conj").get<std::string>());
    t.relator = item.at("rel").get<int>();
    t.sign = item.at("sign").get<int>();
    p.relator(t.relator);
    if (t.sign != 1 && t.sign != -1) {
      throw DomainError("null expression sign must be +1 or -1");
    }
    expr.push_back(std::move(t));
  }
  return expr;
}

Json to_json(AreaResult const& r, Presentation const& p) {
  bool exact = r.status == AreaResult::Status::exact;
  Json out{{"status", exact ? "exact" : "exhausted"}};
  if (exact) {
    out["area"] = r.area;
  }
  out["lower_bound"] = r.lower_bound;
  out["start_bound"] = r.start_bound;
  out["length_cap"] = r.length_cap;
  out["length_pruned"] = r.length_pruned;
  out["cap_independent"] = r.cap_independent();
  out["nodes"] = r.nodes;
  if (exact) {
    out["witness"] = to_json(r.witness, p);
  }
  return out;
}

Json to_json(DehnResult const& r, Presentation const& p) {
  return Json{{"n", r.n},
              {"value", r.value},
              {"exact", r.exact},
              {"witness", p.format(r.witness)},
              {"words_checked", r.words_checked}};
}

Json to_json(DistanceResult const& r) {
  Json out{{"status", r.found ? "exact" : "greater_than"},
           {"value", r.found ? r.distance : r.radius},
           {"radius", r.radius},
           {"visited", r.visited}};
  return out;
}

Json to_json(DistortionRow const& r) {
  return Json{{"n", r.n},
              {"ambient_length", r.ambient_length},
              {"status", r.exact ? "exact" : "greater_than"},
              {"value", r.value}};
}

Json to_json(BasisChange const& c, FactorHom const& h) {
  auto alphabet = Alphabet::standard(h.rank());
  Json moves = Json::array();
  for (auto const& m : c.moves) {
    moves.push_back(to_string(m));
  }
  Json basis = Json::array();
  Json images = Json::array();
  for (auto const& w : c.new_basis) {
    basis.push_back(to_string(w, alphabet));
    images.push_back(ab_image(h, w).coords());
  }
  Json inverse = Json::array();
  for (auto const& w : c.inverse_basis) {
    inverse.push_back(to_string(w, alphabet));
  }
  return Json{{"moves", moves},
              {"new_basis", basis},
              {"new_basis_images", images},
              {"inverse_basis", inverse}};
}

Json to_json(SyllableForm const& f, SplittingData const& d) {
  Json blocks = Json::array();
  for (auto const& b : f.blocks) {
    blocks.push_back(Json{{"k", b.k}, {"exponent", b.exponent}});
  }
  Json factors = Json::array();
  auto alphabet = Alphabet::standard(d.m());
  for (auto const& w : f.m_part.factors) {
    factors.push_back(to_string(w, alphabet));
  }
  return Json{{"group", d.whole().name()},
              {"m_part", Json{{"factors", factors}}},
              {"blocks", blocks}};
}

Json to_json(ToyReport const& r, Presentation const& p) {
  char const* verdict = r.verdict == ToyReport::Verdict::holds       ? "holds"
                        : r.verdict == ToyReport::Verdict::violated ? "violated"
                                                                     : "inconclusive";
  return Json{{"k", r.k},
              {"n", r.n},
              {"word", p.format(r.word)},
              {"word_length", r.word_length},
              {"subgroup_distance", r.subgroup_distance},
              {"bound", r.bound},
              {"verdict", verdict},
              {"bound_certified", r.bound_certified},
              {"area", to_json(r.area, p)}};
}

Json to_json(CertificateReport const& r) {
  Json evidence = Json::array();
  for (auto const& e : r.evidence) {
    evidence.push_back(Json{{"verifier", e.verifier},
                            {"inputs_hash", e.inputs_hash},
                            {"passed", e.passed},
                            {"detail", e.detail}});
  }
  Json distance{{"lower_bound", r.distance_lower_bound},
                {"bfs", r.distance_exact ? Json(r.distance_value) : Json()}};
  return Json{
      {"n", r.n},
      {"status", r.conclusive ? "certified" : "inconclusive"},
      {"test_word", r.test_word},
      {"test_word_length", Json{{"computed", r.computed_length},
                                {"stated", r.stated_length}}},
      {"subgroup_distance", distance},
      {"area_lower_bound", r.area_lower_bound},
      {"inequality", "Area([w_n, (y2 x2)^n]) >= 2n * d_B(1, h_n) >= 2n * n^2"},
      {"note",
       "the bound is cubic in n while the test word length is linear in n"},
      {"evidence", evidence}};
}

}  // namespace kdp
