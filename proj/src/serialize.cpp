#include "monodromy/serialize.hpp"

namespace monodromy {

namespace {

Json coeff_array(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(rat_str(r));
  return a;
}

const char* kind_name(OrderVerdict::Kind k) {
  switch (k) {
    case OrderVerdict::Kind::kFinite: return "finite";
    case OrderVerdict::Kind::kInfinite: return "infinite";
    case OrderVerdict::Kind::kUndecidedCap: return "undecided_cap";
  }
  return "?";
}

}  // namespace

Json json_rat(const Rat& r) { return rat_str(r); }

Json json_of(const Cyc& x) {
  return Json{{"kind", "exact"},
              {"conductor", x.conductor()},
              {"coeffs", coeff_array(x.coeffs())}};
}

Json json_of(const Ext& x) {
  Json j{{"kind", "exact"},
         {"conductor", x.conductor()},
         {"coeffs", coeff_array(x.u().coeffs())}};
  if (!x.is_cyclotomic()) {
    j["t_coeffs"] = coeff_array(x.v().coeffs());
    j["radicand"] = coeff_array(x.radicand().coeffs());
  }
  return j;
}

Json json_of(const RatInterval& iv) {
  return Json{{"kind", "interval"},
              {"lo", rat_str(iv.lo)},
              {"hi", rat_str(iv.hi)}};
}

Json json_of(const ComplexBox& box) {
  return Json{{"kind", "interval"},
              {"re", {{"lo", rat_str(box.re.lo)}, {"hi", rat_str(box.re.hi)}}},
              {"im", {{"lo", rat_str(box.im.lo)}, {"hi", rat_str(box.im.hi)}}}};
}

Json json_of(const RatPoly& p) {
  return Json{{"kind", "exact"},
              {"degree", p.degree()},
              {"coeffs", coeff_array(p.coeffs())}};
}

Json json_of(const Mat2& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) row.push_back(json_of(m.at(r, c)));
    rows.push_back(row);
  }
  return Json{{"entries", rows}};
}

Json json_of(const CycMat& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.size(); ++c) row.push_back(json_of(m.at(r, c)));
    rows.push_back(row);
  }
  return Json{{"size", m.size()}, {"entries", rows}};
}

Json json_of(const Word& w) {
  Json letters = Json::array();
  for (const Letter& l : w.letters())
    letters.push_back(Json{{"gen", l.gen}, {"exp", l.exp}});
  return Json{{"alphabet", alphabet_name(w.alphabet())},
              {"text", w.str()},
              {"letters", letters}};
}

Json json_of(const OrderVerdict& v) {
  Json j{{"kind", kind_name(v.kind)}, {"reason", v.reason}};
  if (v.finite()) j["order"] = v.order;
  if (v.witness_k) {
    Json w{{"galois_index", *v.witness_k},
           {"escaped_real_axis", v.witness_nonreal}};
    if (v.witness_box) w["enclosure"] = json_of(*v.witness_box);
    j["witness"] = w;
  }
  if (v.ratio_trace_minpoly)
    j["trace_ratio_minimal_polynomial"] = json_of(*v.ratio_trace_minpoly);
  return j;
}

Json json_of(const SigmaTraceReport& r) {
  return Json{{"trace", json_of(r.trace)},
              {"det", json_of(r.det)},
              {"closed_form", json_of(r.closed_form)},
              {"trace_matches", r.trace_matches},
              {"det_is_one", r.det_is_one}};
}

Json json_of(const ScanReport& r) {
  Json rows = Json::array();
  for (const ScanRow& row : r.rows)
    rows.push_back(Json{{"k", row.k},
                        {"value", json_of(row.value)},
                        {"enclosure", json_of(row.box)},
                        {"bounded", row.bounded}});
  Json j{{"level", r.level}, {"rows", rows}, {"all_bounded", r.all_bounded}};
  if (r.first_violation_k) j["first_violation_k"] = *r.first_violation_k;
  return j;
}

Json json_of(const LanternReport& r) {
  return Json{{"relation_word", json_of(r.relation_sigma)},
              {"relation_image", json_of(r.relation_braid)},
              {"relation_word_trivial", r.relation_word_trivial},
              {"relation_matrix_identity", r.relation_matrix_identity},
              {"control_word", json_of(r.control_sigma)},
              {"control_image", json_of(r.control_braid)},
              {"control_matrix_identity", r.control_matrix_identity},
              {"passed", r.passed}};
}

Json json_of(const ClassifyReport& r) {
  Json hist = Json::object();
  for (const auto& [ord, count] : r.element_order_histogram)
    hist[std::to_string(ord)] = count;
  Json j{{"group", group_id_name(r.id)},
         {"group_order", r.group_order},
         {"closure_complete", r.closure_complete},
         {"element_order_histogram", hist}};
  if (r.id == GroupId::kCyclic || r.id == GroupId::kDihedral)
    j["parameter"] = r.parameter;
  if (r.witness)
    j["presentation"] = Json{{"relation", r.witness->relation},
                             {"a_index", r.witness->a_index},
                             {"b_index", r.witness->b_index},
                             {"verified", r.witness->verified}};
  Json elems = Json::array();
  for (const ClosureElement& e : r.closure.elements)
    elems.push_back(Json{{"generation", e.generation}, {"matrix", json_of(e.m)}});
  j["elements"] = elems;
  return j;
}

Json json_of(const RelationsReport& r) {
  return Json{{"s2_matches_st3", r.s2_matches_st3},
              {"s4_is_identity", r.s4_is_identity},
              {"passed", r.passed}};
}

Json json_of(const ModularImageReport& r) {
  Json elems = Json::array();
  for (const ModularElement& e : r.elements)
    elems.push_back(Json{{"generation", e.generation},
                         {"s_exponent", e.s_exponent},
                         {"certificate_ok", e.certificate_ok}});
  Json j{{"level", r.level},
         {"finite", r.finite},
         {"cap_exceeded", r.cap_exceeded},
         {"order", r.order},
         {"all_certified", r.all_certified},
         {"relations", json_of(r.relations)},
         {"elements", elems}};
  return j;
}

}  // namespace monodromy
