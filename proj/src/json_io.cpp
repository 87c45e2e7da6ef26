#include "pellsurf/json_io.hpp"

#include "pellsurf/error.hpp"

namespace pellsurf {

const char* verdict_status_name(SolvabilityVerdict::Status s) {
  switch (s) {
    case SolvabilityVerdict::Status::Solved: return "solved";
    case SolvabilityVerdict::Status::StructurallyUnsolvable: return "structural";
    case SolvabilityVerdict::Status::UnknownWithinBound: return "unknown";
  }
  return "?";
}

Json verdict_to_json(const SolvabilityVerdict& v, char var) {
  Json j;
  j["status"] = verdict_status_name(v.status);
  if (v.status == SolvabilityVerdict::Status::StructurallyUnsolvable) {
    j["reason"] = reason_name(v.reason);
  } else {
    j["reason"] = nullptr;
  }
  if (v.solved()) {
    j["x"] = v.fundamental->x().to_string(var);
    j["y"] = v.fundamental->y().to_string(var);
    j["torsion_order"] = v.torsion_order();
    j["unit_index"] = v.unit_index;
    j["minimal"] = {{"x", v.minimal->x().to_string(var)},
                    {"y", v.minimal->y().to_string(var)},
                    {"norm", v.minimal->norm().to_string()}};
  } else {
    j["x"] = nullptr;
    j["y"] = nullptr;
    j["torsion_order"] = nullptr;
  }
  j["steps_used"] = v.steps_used;
  return j;
}

Json line_to_json(const AffineLine& line, char var) {
  Json j;
  j["kind"] = line_kind_name(line.kind);
  j["n"] = line.n;
  j["sign"] = line.sign;
  j["x"] = line.x.to_string(var);
  j["y"] = line.y.to_string(var);
  if (line.root_locus) {
    j["u"] = "alpha_" + std::to_string(line.root_index);
    j["root_of"] = line.root_locus->to_string('u');
  } else {
    j["u"] = line.u.to_string(var);
  }
  j["definition_field"] = line.definition_field;
  return j;
}

Json expansion_to_json(const CFExpansion& e, char var) {
  Json j;
  Json qs = Json::array();
  for (const auto& a : e.quotients) qs.push_back(a.to_string(var));
  Json cs = Json::array();
  for (const auto& c : e.convergents) {
    cs.push_back({{"p", c.p.to_string(var)}, {"q", c.q.to_string(var)}, {"scale", c.scale.to_string()}});
  }
  j["quotients"] = qs;
  j["convergents"] = cs;
  j["terminated"] = e.terminated;
  j["steps_done"] = e.steps_done;
  return j;
}

Json ram_profile_to_json(const RamProfile& r, char var) {
  Json j;
  j["map"] = r.map.to_string(var);
  j["characteristic"] = r.characteristic;
  Json pts = Json::array();
  for (const auto& pt : r.finite) {
    pts.push_back({{"locus", pt.locus.to_string(var)},
                   {"points", pt.point_count},
                   {"e", pt.e},
                   {"d", pt.d},
                   {"tame", pt.tame}});
  }
  j["finite"] = pts;
  j["infinity"] = {{"e", r.infinity.e}, {"d", r.infinity.d}, {"tame", r.infinity.tame}};
  j["total"] = r.total;
  j["hurwitz_expected"] = r.hurwitz_expected();
  return j;
}

Json error_to_json(const Error& e) {
  return {{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
}

}  // namespace pellsurf
