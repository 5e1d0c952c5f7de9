#pragma once

#include <string>
#include <vector>

#include "tanlim/polyring.hpp"

namespace tanlim::cli {

struct Request {
  std::string command;  // tangent-cone, discriminant, blowup, decide, limit, trace
  std::string surface;
  std::vector<Rat> point{0, 0, 0};
  std::vector<std::size_t> divisor;
  int max_depth = 0;  // 0: default bound
  bool json = false;
  bool verbose = false;
};

struct Response {
  int status = 0;  // 0 success, 1 input error, 2 unresolved
  std::string out;
  std::string err;
};

const std::vector<std::string>& commands();

// "1/2,0,-3" -> three rationals.
std::vector<Rat> parse_point(const std::string& text);

// "xz" or "x,z" -> coordinate indices.
std::vector<std::size_t> parse_divisor(const std::string& text);

Response run(const Request& req);

// Parses a JSON trace and re-checks the strict-transform identity at every node.
bool verify_json_trace(const std::string& text);

}  // namespace tanlim::cli
