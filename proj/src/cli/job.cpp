#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "gsurf/cli.hpp"
#include "gsurf/errors.hpp"

namespace gsurf::cli {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw ValidationError((pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

void only_keys(const Json& obj, const std::string& pointer, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(pointer, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(pointer + "/" + key, "unknown field");
  }
}

std::size_t as_count(const Json& v, const std::string& pointer) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(pointer, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Permutation as_permutation(const Json& v, const std::string& pointer) {
  if (v.is_string()) {
    try {
      return Permutation::parse(v.get<std::string>());
    } catch (const ValidationError& e) {
      fail(pointer, e.what());
    }
  }
  if (v.is_array()) {
    std::vector<int> images;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_integer() || v[i].get<long long>() < 1 || v[i].get<std::size_t>() > v.size())
        fail(pointer + "/" + std::to_string(i), "expected a point between 1 and " + std::to_string(v.size()));
      images.push_back(v[i].get<int>() - 1);
    }
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) fail(pointer, "image list is not a permutation");
    return Permutation(std::move(images));
  }
  fail(pointer, "expected cycle notation or an image list");
}

}  // namespace

int parse_element(const Json& value, const FiniteGroup& group, const std::vector<int>& generator_ids,
                  const std::string& pointer) {
  if (value.is_array() || (value.is_string() && value.get<std::string>().find('(') != std::string::npos)) {
    const Permutation p = as_permutation(value, pointer);
    if (group.permutations().empty()) fail(pointer, "the group has no permutation representation");
    const std::size_t degree = group.permutations().front().degree();
    if (p.degree() > degree) fail(pointer, "permutation moves points beyond the group's degree");
    const auto id = group.find(p.extended(degree));
    if (!id) fail(pointer, p.to_string() + " is not in the group");
    return *id;
  }
  if (!value.is_string()) fail(pointer, "expected an element");
  std::istringstream in(value.get<std::string>());
  std::string tok;
  int x = 0;
  bool any = false;
  while (in >> tok) {
    any = true;
    if (tok == "e" || tok == "1") continue;
    if (tok[0] != 'g') fail(pointer, "unknown token '" + tok + "'");
    std::size_t pos = 1;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    std::size_t k = 0;
    if (pos == 1 || std::from_chars(tok.data() + 1, tok.data() + pos, k).ec != std::errc() || k < 1 ||
        k > generator_ids.size())
      fail(pointer, "'" + tok + "' does not name a group generator");
    long power = 1;
    if (pos < tok.size()) {
      const char* first = tok.data() + pos + 1;
      const char* last = tok.data() + tok.size();
      if (tok[pos] != '^') fail(pointer, "unexpected text in '" + tok + "'");
      if (first < last && *first == '+') ++first;
      const auto res = std::from_chars(first, last, power);
      if (res.ec != std::errc() || res.ptr != last) fail(pointer, "bad exponent in '" + tok + "'");
    }
    x = group.mul(x, group.pow(generator_ids[k - 1], power));
  }
  if (!any) fail(pointer, "empty element word");
  return x;
}

Job parse_job(const Json& doc, const Overrides& overrides) {
  only_keys(doc, "", {"name", "group", "cover", "subgroups", "curves", "options"});
  Job job;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("/name", "expected a string");
    job.name = doc["name"].get<std::string>();
  }

  if (doc.contains("options")) {
    const Json& o = doc["options"];
    only_keys(o, "/options", {"cap_group", "cap_oracle", "cap_topology", "oracle", "rational_class", "subgroup"});
    if (o.contains("cap_group")) job.options.cap_group = as_count(o["cap_group"], "/options/cap_group");
    if (o.contains("cap_oracle")) job.options.cap_oracle = as_count(o["cap_oracle"], "/options/cap_oracle");
    if (o.contains("cap_topology")) job.options.cap_topology = as_count(o["cap_topology"], "/options/cap_topology");
    if (o.contains("oracle")) {
      if (!o["oracle"].is_boolean()) fail("/options/oracle", "expected true or false");
      job.options.oracle = o["oracle"].get<bool>();
    }
    if (o.contains("rational_class"))
      job.options.rational_class = as_count(o["rational_class"], "/options/rational_class");
    if (o.contains("subgroup")) {
      if (!o["subgroup"].is_string()) fail("/options/subgroup", "expected a string");
      job.options.subgroup = o["subgroup"].get<std::string>();
    }
  }
  if (overrides.cap_group) job.options.cap_group = *overrides.cap_group;
  if (overrides.cap_oracle) job.options.cap_oracle = *overrides.cap_oracle;
  if (overrides.cap_topology) job.options.cap_topology = *overrides.cap_topology;
  if (overrides.subgroup) job.options.subgroup = overrides.subgroup;
  if (overrides.oracle) job.options.oracle = *overrides.oracle;

  // group
  if (!doc.contains("group")) fail("/group", "missing");
  const Json& g = doc["group"];
  only_keys(g, "/group", {"named", "generators"});
  if (g.contains("named") == g.contains("generators")) fail("/group", "give exactly one of 'named' or 'generators'");
  std::vector<Permutation> gens;
  if (g.contains("named")) {
    if (!g["named"].is_string()) fail("/group/named", "expected a group name");
    try {
      gens = named_group_generators(g["named"].get<std::string>());
    } catch (const ValidationError& e) {
      fail("/group/named", e.what());
    }
  } else {
    if (!g["generators"].is_array() || g["generators"].empty()) fail("/group/generators", "expected a nonempty list");
    for (std::size_t i = 0; i < g["generators"].size(); ++i)
      gens.push_back(as_permutation(g["generators"][i], "/group/generators/" + std::to_string(i)));
  }
  auto group = std::make_shared<const FiniteGroup>(FiniteGroup::from_generators(gens, job.options.cap_group));
  const std::size_t degree = group->permutations().front().degree();
  for (const auto& p : gens) job.generator_ids.push_back(*group->find(p.extended(degree)));
  job.datum.group = group;

  // cover
  if (!doc.contains("cover")) fail("/cover", "missing");
  const Json& c = doc["cover"];
  only_keys(c, "/cover", {"quotient_genus", "handles", "branch"});
  const Json handles = c.contains("handles") ? c["handles"] : Json::array();
  const Json branch = c.contains("branch") ? c["branch"] : Json::array();
  if (!handles.is_array()) fail("/cover/handles", "expected a list of pairs");
  if (!branch.is_array()) fail("/cover/branch", "expected a list of elements");
  job.datum.quotient_genus = static_cast<int>(handles.size());
  if (c.contains("quotient_genus") && as_count(c["quotient_genus"], "/cover/quotient_genus") != handles.size())
    fail("/cover/quotient_genus", "does not match the number of handle pairs");
  for (std::size_t j = 0; j < handles.size(); ++j) {
    const std::string p = "/cover/handles/" + std::to_string(j);
    if (!handles[j].is_array() || handles[j].size() != 2) fail(p, "expected a pair [alpha, beta]");
    job.datum.handles.emplace_back(parse_element(handles[j][0], *group, job.generator_ids, p + "/0"),
                                   parse_element(handles[j][1], *group, job.generator_ids, p + "/1"));
  }
  for (std::size_t i = 0; i < branch.size(); ++i)
    job.datum.branch.push_back(parse_element(branch[i], *group, job.generator_ids, "/cover/branch/" + std::to_string(i)));
  const DatumCheck check = validate(job.datum);
  if (!check.ok()) fail("/cover", std::string(to_string(*check.error)) + ": " + check.message);

  if (doc.contains("subgroups")) {
    const Json& s = doc["subgroups"];
    if (!s.is_object()) fail("/subgroups", "expected an object of named generator lists");
    for (const auto& [name, list] : s.items()) {
      const std::string p = "/subgroups/" + name;
      if (!list.is_array()) fail(p, "expected a list of elements");
      NamedSubgroup ns;
      ns.name = name;
      for (std::size_t i = 0; i < list.size(); ++i)
        ns.generators.push_back(parse_element(list[i], *group, job.generator_ids, p + "/" + std::to_string(i)));
      ns.subgroup = generate_subgroup(*group, ns.generators);
      job.subgroups.push_back(std::move(ns));
    }
  }
  if (job.options.subgroup) {
    bool found = false;
    for (const auto& s : job.subgroups) found = found || s.name == *job.options.subgroup;
    if (!found) fail("/subgroups", "no subgroup named '" + *job.options.subgroup + "'");
  }

  if (doc.contains("curves")) {
    const Json& cv = doc["curves"];
    if (!cv.is_object()) fail("/curves", "expected an object of named curve words");
    for (const auto& [name, word] : cv.items()) {
      const std::string p = "/curves/" + name;
      if (!word.is_string()) fail(p, "expected a word such as \"a1 b1^-1\"");
      try {
        parse_curve(word.get<std::string>(), job.datum.quotient_genus, job.datum.branch_count(), name);
      } catch (const ValidationError& e) {
        fail(p, e.what());
      }
      job.curve_names.push_back(name);
      job.curve_words.push_back(word.get<std::string>());
    }
  }
  return job;
}

Job load_job(const std::filesystem::path& path, const Overrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string() + ": cannot open");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  Job job = parse_job(doc, overrides);
  if (job.name.empty()) job.name = path.stem().string();
  return job;
}

}  // namespace gsurf::cli
