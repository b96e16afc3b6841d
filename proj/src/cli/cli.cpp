#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gsurf/cli.hpp"
#include "gsurf/errors.hpp"

namespace gsurf::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); });
}

std::string inline_array(const Json& v) {
  std::string s = "[";
  // strings stay quoted so that embedded commas cannot blur the items
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].dump();
  return s + "]";
}

void render(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_array() && flat(value))
        out += pad + key + ": " + inline_array(value) + "\n";
      else if (!value.is_structured())
        out += pad + key + ": " + scalar(value) + "\n";
      else {
        out += pad + key + ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_array() && flat(item))
        out += pad + "- " + inline_array(item) + "\n";
      else if (!item.is_structured())
        out += pad + "- " + scalar(item) + "\n";
      else {
        out += pad + "-\n";
        render(item, indent + 2, out);
      }
    }
  } else {
    out += pad + scalar(v) + "\n";
  }
}

Json error_json(const Outcome& o) {
  Json j;
  j["error"] = o.error;
  j["exit_code"] = o.exit_code;
  return j;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError(path + ": cannot write");
  out << j.dump(2) << "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

Outcome run_file(const std::string& subcommand, const std::filesystem::path& path, const Overrides& overrides) {
  Outcome o;
  try {
    o.report = run_report(subcommand, load_job(path, overrides));
    return o;
  } catch (const ValidationError& e) {
    o.exit_code = kValidation;
    o.error = e.what();
  } catch (const CapExceeded& e) {
    o.exit_code = kCap;
    o.error = e.what();
  } catch (const InvariantViolation& e) {
    o.exit_code = kInvariant;
    o.error = std::string("invariant violation: ") + e.what();
  } catch (const nlohmann::json::exception& e) {
    o.exit_code = kValidation;
    o.error = e.what();
  } catch (const std::exception& e) {
    o.exit_code = kInvariant;
    o.error = std::string("internal error: ") + e.what();
  }
  o.report = nullptr;
  return o;
}

int main(int argc, char** argv) {
  CLI::App app{"Character-theoretic and topological reports for finite group actions on curves"};
  app.name("gsurf");
  std::string sub;
  std::string input;
  std::string json_path;
  std::string batch;
  Overrides ov;
  bool oracle = false;
  app.add_option("command", sub, "Subcommand")->required()->check(CLI::IsMember(subcommands()));
  app.add_option("input", input, "Job document (JSON)");
  app.add_option("--json", json_path, "Also write the report as JSON to this path");
  app.add_option("--cap-group", ov.cap_group, "Maximum group order");
  app.add_option("--cap-oracle", ov.cap_oracle, "Maximum group order for the homology oracles");
  app.add_option("--cap-topology", ov.cap_topology, "Maximum group order for the surface model");
  app.add_option("--subgroup", ov.subgroup, "Subgroup N for check-gn");
  app.add_flag("--oracle", oracle, "Run the chain-complex and commutant oracles");
  app.add_option("--batch", batch, "Process every *.json document in a directory concurrently");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }
  if (oracle) ov.oracle = true;
  if (input.empty() == batch.empty()) {
    std::cerr << "gsurf: give either an input document or --batch <dir>\n";
    return kValidation;
  }

  try {
    if (batch.empty()) {
      const Outcome o = run_file(sub, input, ov);
      if (!json_path.empty()) write_json(json_path, o.exit_code == kOk ? o.report : error_json(o));
      if (o.exit_code != kOk) {
        std::cerr << "gsurf: error: " << o.error << "\n";
        return o.exit_code;
      }
      std::cout << render_text(o.report);
      return kOk;
    }

    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(batch)) throw ValidationError(batch + ": not a directory");
    for (const auto& entry : std::filesystem::directory_iterator(batch))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<std::future<Outcome>> pending;
    for (const auto& f : files) pending.push_back(std::async(std::launch::async, run_file, sub, f, ov));
    int worst = kOk;
    Json all = Json::object();
    for (std::size_t i = 0; i < files.size(); ++i) {
      const Outcome o = pending[i].get();
      const std::string name = files[i].filename().string();
      std::cout << "== " << name << " ==\n";
      if (o.exit_code == kOk) {
        std::cout << render_text(o.report);
        all[name] = o.report;
      } else {
        std::cout << "error (exit " << o.exit_code << "): " << o.error << "\n";
        all[name] = error_json(o);
      }
      worst = std::max(worst, o.exit_code);
    }
    if (!json_path.empty()) write_json(json_path, all);
    return worst;
  } catch (const ValidationError& e) {
    std::cerr << "gsurf: error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace gsurf::cli
