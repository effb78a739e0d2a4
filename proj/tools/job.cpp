/*
 * Copyright (c) 2026, The surfkernel Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "surfkernel/error.hpp"

namespace surfkernel::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string const& what) {
  throw Error(ErrorCode::kParse, "job: " + what);
}

void reject_unknown(json const& obj, std::string const& where,
                    std::set<std::string> const& allowed) {
  for (auto const& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      fail("unknown field '" + key + "' in " + where);
    }
  }
}

json const& field(json const& obj, char const* key, std::string const& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail("missing field '" + std::string(key) + "' in " + where);
  }
  return obj.at(key);
}

std::uint64_t as_count(json const& v, std::string const& what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(what + " must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

FiniteGroup parse_group(json const& g) {
  if (!g.is_object()) {
    fail("group must be an object");
  }
  reject_unknown(g, "group", {"kind", "n", "degree", "table", "names"});
  auto const& kind = field(g, "kind", "group");
  if (!kind.is_string()) {
    fail("group.kind must be a string");
  }
  std::string const k = kind.get<std::string>();
  FiniteGroup grp = [&] {
    if (k == "cyclic") {
      return make_cyclic(as_count(field(g, "n", "group"), "group.n"));
    }
    if (k == "symmetric") {
      return make_symmetric(as_count(field(g, "degree", "group"), "group.degree"));
    }
    if (k == "table") {
      auto const& t = field(g, "table", "group");
      if (!t.is_array()) {
        fail("group.table must be an array of rows");
      }
      std::vector<std::vector<std::uint32_t>> rows;
      for (auto const& row : t) {
        if (!row.is_array()) {
          fail("group.table rows must be arrays");
        }
        std::vector<std::uint32_t> r;
        for (auto const& e : row) {
          r.push_back(static_cast<std::uint32_t>(as_count(e, "group.table entry")));
        }
        rows.push_back(std::move(r));
      }
      return FiniteGroup::from_table(rows);
    }
    fail("group.kind must be cyclic, symmetric or table, got '" + k + "'");
  }();
  if (g.contains("names")) {
    auto const& names = g.at("names");
    if (!names.is_array()) {
      fail("group.names must be an array of strings");
    }
    std::vector<std::string> labels;
    for (auto const& n : names) {
      if (!n.is_string()) {
        fail("group.names must be an array of strings");
      }
      labels.push_back(n.get<std::string>());
    }
    grp = grp.with_names(std::move(labels));
  }
  return grp;
}

OrbifoldSignature parse_signature(json const& s) {
  if (!s.is_object()) {
    fail("signature must be an object");
  }
  reject_unknown(s, "signature", {"genus", "periods"});
  auto const genus = as_count(field(s, "genus", "signature"), "signature.genus");
  std::vector<std::uint32_t> periods;
  if (s.contains("periods")) {
    if (!s.at("periods").is_array()) {
      fail("signature.periods must be an array");
    }
    for (auto const& m : s.at("periods")) {
      periods.push_back(static_cast<std::uint32_t>(as_count(m, "period")));
    }
  }
  return OrbifoldSignature(static_cast<std::uint32_t>(genus), std::move(periods));
}

GroupElement parse_element(json const& e, FiniteGroup const& grp) {
  if (e.is_number_integer()) {
    auto const i = e.get<std::int64_t>();
    if (i < 0 || static_cast<std::uint64_t>(i) >= grp.order()) {
      fail("element index " + std::to_string(i) + " out of range");
    }
    return GroupElement{static_cast<std::uint32_t>(i)};
  }
  if (e.is_string()) {
    if (auto const g = grp.find(e.get<std::string>())) {
      return *g;
    }
    fail("unknown element '" + e.get<std::string>() + "'");
  }
  fail("elements are given by index or label");
}

std::vector<GroupElement> parse_elements(json const& phi, char const* key,
                                         FiniteGroup const& grp) {
  std::vector<GroupElement> out;
  if (!phi.contains(key)) {
    return out;
  }
  if (!phi.at(key).is_array()) {
    fail("phi." + std::string(key) + " must be an array");
  }
  for (auto const& e : phi.at(key)) {
    out.push_back(parse_element(e, grp));
  }
  return out;
}

std::vector<Word> transversal_from_json(json const& t, FiniteGroup const& grp) {
  if (!t.is_object()) {
    fail("transversal must be an object mapping elements to words");
  }
  std::vector<std::optional<Word>> reps(grp.order());
  for (auto const& [label, word] : t.items()) {
    auto const g = grp.find(label);
    if (!g) {
      fail("transversal names unknown element '" + label + "'");
    }
    if (!word.is_string()) {
      fail("transversal words must be strings");
    }
    if (reps[g->index]) {
      fail("transversal lists element '" + label + "' twice");
    }
    reps[g->index] = parse_word(word.get<std::string>());
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!reps[i]) {
      fail("transversal misses element '" +
           grp.name(GroupElement{static_cast<std::uint32_t>(i)}) + "'");
    }
    out.push_back(*reps[i]);
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

JobSpec parse_job(std::string_view json_text) {
  json const j = parse_json(json_text);
  if (!j.is_object()) {
    fail("top level must be an object");
  }
  reject_unknown(j, "job",
                 {"group", "signature", "phi", "transversal", "harvey",
                  "orbit_ops", "options"});
  FiniteGroup grp = parse_group(field(j, "group", "job"));
  OrbifoldSignature sig = parse_signature(field(j, "signature", "job"));
  json const& p = field(j, "phi", "job");
  if (!p.is_object()) {
    fail("phi must be an object");
  }
  reject_unknown(p, "phi", {"A", "B", "Xi"});
  GeneratingVector phi{parse_elements(p, "A", grp), parse_elements(p, "B", grp),
                       parse_elements(p, "Xi", grp)};

  JobSpec job{std::move(grp), std::move(sig), std::move(phi), {}, {}, {}, 10000};
  if (j.contains("transversal")) {
    job.transversal = transversal_from_json(j.at("transversal"), job.group);
  }
  auto const program = [&](char const* key) {
    if (!j.at(key).is_string()) {
      fail(std::string(key) + " must be a string such as \"V1,Bhat:1\"");
    }
    return parse_program(j.at(key).get<std::string>());
  };
  if (j.contains("harvey")) {
    job.harvey = program("harvey");
  }
  if (j.contains("orbit_ops")) {
    job.orbit_ops = program("orbit_ops");
  }
  if (j.contains("options")) {
    json const& o = j.at("options");
    if (!o.is_object()) {
      fail("options must be an object");
    }
    reject_unknown(o, "options", {"cap"});
    if (o.contains("cap")) {
      job.cap = as_count(o.at("cap"), "options.cap");
    }
  }
  return job;
}

JobSpec load_job(std::filesystem::path const& file) {
  std::ifstream in(file);
  if (!in) {
    fail("cannot read '" + file.string() + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_job(text.str());
}

std::vector<Word> parse_transversal(std::string_view json_text,
                                    FiniteGroup const& grp) {
  return transversal_from_json(parse_json(json_text), grp);
}

}  // namespace surfkernel::cli
