#include "fetch.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "oudesign/errors.hpp"

namespace oudesign::cli {

std::string fetch_url(const std::string& url, int timeout_s) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ArgumentError("URL needs an http:// or https:// scheme");
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw ArgumentError("unsupported URL scheme: " + scheme);
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(timeout_s, 0);
  client.set_read_timeout(timeout_s, 0);
  const auto res = client.Get(path);
  if (!res) throw FetchError("request failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw FetchError("HTTP status " + std::to_string(res->status));
  return res->body;
}

}  // namespace oudesign::cli
