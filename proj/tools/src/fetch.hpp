#pragma once

#include <stdexcept>
#include <string>

namespace oudesign::cli {

struct FetchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// GET an http:// or https:// URL and return the body. Throws FetchError on
// network failure or a non-200 status.
std::string fetch_url(const std::string& url, int timeout_s);

}  // namespace oudesign::cli
