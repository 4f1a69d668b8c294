#include "hrisk/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace hrisk {

namespace {

using nlohmann::json;

std::string trimmed(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

DiscreteDistribution from_pairs(std::vector<DiscreteDistribution::Atom> pairs,
                                bool as_weights) {
  if (as_weights) return DiscreteDistribution::from_weights(std::move(pairs));
  return DiscreteDistribution::from_atoms(std::move(pairs), 1e-9);
}

DiscreteDistribution parse_distribution_json(const std::string& text,
                                             bool as_weights) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed distribution file: ") +
                             e.what());
  }
  std::vector<DiscreteDistribution::Atom> pairs;
  try {
    for (const auto& atom : j.at("atoms")) {
      pairs.push_back({atom.at("x").get<double>(), atom.at("p").get<double>()});
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed distribution file: ") +
                             e.what());
  }
  return from_pairs(std::move(pairs), as_weights);
}

DiscreteDistribution parse_distribution_csv(const std::string& text,
                                            bool as_weights) {
  std::istringstream lines(text);
  std::string line;
  bool header_seen = false;
  std::vector<DiscreteDistribution::Atom> pairs;
  while (std::getline(lines, line)) {
    const std::string row = trimmed(line);
    if (row.empty()) continue;
    if (!header_seen) {
      if (row != "value,probability") {
        throw std::runtime_error(
            "distribution CSV must start with header value,probability");
      }
      header_seen = true;
      continue;
    }
    const std::size_t comma = row.find(',');
    if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos) {
      throw std::runtime_error("distribution CSV row needs two fields: " + row);
    }
    pairs.push_back({parse_real(trimmed(row.substr(0, comma))),
                     parse_real(trimmed(row.substr(comma + 1)))});
  }
  if (!header_seen) {
    throw std::runtime_error("distribution CSV is empty");
  }
  return from_pairs(std::move(pairs), as_weights);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double parse_real(const std::string& text) {
  const std::string body = trimmed(text);
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("not a number: " + text);
  }
  if (pos != body.size()) {
    throw std::runtime_error("not a number: " + text);
  }
  return v;
}

DiscreteDistribution parse_distribution(const std::string& text,
                                        bool as_weights) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_distribution_json(text, as_weights);
    return parse_distribution_csv(text, as_weights);
  }
  throw std::runtime_error("distribution file is empty");
}

KusuokaMixture parse_mixture(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed mixture file: ") +
                             e.what());
  }
  std::vector<KusuokaMixture::Atom> pairs;
  try {
    for (const auto& atom : j.at("kusuoka")) {
      pairs.push_back(
          {atom.at("alpha").get<double>(), atom.at("w").get<double>()});
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed mixture file: ") +
                             e.what());
  }
  return KusuokaMixture::from_atoms(std::move(pairs), 1e-9);
}

NormSpec parse_norm_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::runtime_error("norm must look like lp:<p>, avar:<alpha>, "
                             "spectral:<path>, or expectile:<alpha>: " +
                             spec);
  }
  const std::string head = spec.substr(0, colon);
  const std::string payload = spec.substr(colon + 1);
  if (head == "lp") return NormSpec::holder(parse_real(payload));
  if (head == "avar") {
    return NormSpec::spectral(KusuokaMixture::avar_at(parse_real(payload)));
  }
  if (head == "spectral") {
    return NormSpec::spectral(parse_mixture(read_file(payload)));
  }
  if (head == "expectile") return NormSpec::expectile(parse_real(payload));
  throw std::runtime_error("unknown norm kind: " + head);
}

std::string format_number(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  std::string s = buf;
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

}  // namespace hrisk
