// Copyright 2026 The dpdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fetch.h"

#include <zlib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpdense/graph.h"
#include "dpdense/status_macros.h"
#include "httplib.h"

namespace dpdense {
namespace {

constexpr KnownDataset kKnownDatasets[] = {
    {"ca-GrQc", "https://snap.stanford.edu/data/ca-GrQc.txt.gz", 5242, 14496},
    {"ca-HepTh", "https://snap.stanford.edu/data/ca-HepTh.txt.gz", 9877, 25998},
    {"ca-HepPh", "https://snap.stanford.edu/data/ca-HepPh.txt.gz", 12008,
     118521},
    {"ca-AstroPh", "https://snap.stanford.edu/data/ca-AstroPh.txt.gz", 18772,
     198110},
    {"ca-CondMat", "https://snap.stanford.edu/data/ca-CondMat.txt.gz", 23133,
     93497},
    {"email-Enron", "https://snap.stanford.edu/data/email-Enron.txt.gz", 36692,
     183831},
    {"loc-gowalla", "https://snap.stanford.edu/data/loc-gowalla_edges.txt.gz",
     196591, 950327},
    {"loc-brightkite",
     "https://snap.stanford.edu/data/loc-brightkite_edges.txt.gz", 58228,
     214078},
    {"facebook", "https://snap.stanford.edu/data/facebook_combined.txt.gz",
     4039, 88234},
};

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

absl::StatusOr<std::string> HttpGet(const std::string& url) {
  const size_t scheme_end = url.find("://");
  const size_t path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path =
      path_start == std::string::npos ? "/" : url.substr(path_start);
  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(30);
  client.set_read_timeout(120);
  auto response = client.Get(path);
  if (!response) {
    return absl::UnavailableError(absl::StrCat(
        "GET ", url, " failed: ", httplib::to_string(response.error())));
  }
  if (response->status != 200) {
    return absl::UnavailableError(
        absl::StrCat("GET ", url, " returned HTTP ", response->status));
  }
  return std::move(response->body);
}

}  // namespace

const KnownDataset* FindKnownDataset(const std::string& name) {
  for (const KnownDataset& d : kKnownDatasets) {
    if (name == d.name) return &d;
  }
  return nullptr;
}

std::string CacheDirectory() {
  if (const char* cache = std::getenv("DPDS_CACHE"); cache && *cache) {
    return cache;
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return absl::StrCat(home, "/.cache/dpdense");
  }
  return "dpdense-cache";
}

absl::StatusOr<std::string> MaybeGunzip(std::string bytes) {
  if (bytes.size() < 2 || static_cast<unsigned char>(bytes[0]) != 0x1f ||
      static_cast<unsigned char>(bytes[1]) != 0x8b) {
    return bytes;
  }
  z_stream stream{};
  if (inflateInit2(&stream, 16 + MAX_WBITS) != Z_OK) {
    return absl::InternalError("inflateInit2 failed");
  }
  stream.next_in = reinterpret_cast<Bytef*>(bytes.data());
  stream.avail_in = static_cast<uInt>(bytes.size());
  std::string out;
  char buffer[1 << 16];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    stream.next_out = reinterpret_cast<Bytef*>(buffer);
    stream.avail_out = sizeof(buffer);
    rc = inflate(&stream, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&stream);
      return absl::DataLossError(
          absl::StrCat("gzip stream corrupt (zlib ", rc, ")"));
    }
    out.append(buffer, sizeof(buffer) - stream.avail_out);
  }
  inflateEnd(&stream);
  return out;
}

absl::StatusOr<std::string> FetchBytes(const std::string& url) {
  std::string bytes;
  if (url.starts_with("file://")) {
    DPDENSE_ASSIGN_OR_RETURN(bytes, ReadFile(url.substr(7)));
  } else if (url.starts_with("http://") || url.starts_with("https://")) {
    DPDENSE_ASSIGN_OR_RETURN(bytes, HttpGet(url));
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported URL scheme: ", url));
  }
  return MaybeGunzip(std::move(bytes));
}

absl::StatusOr<FetchResult> FetchDataset(
    const std::string& name, std::optional<std::string> url,
    std::optional<std::pair<int64_t, int64_t>> expect) {
  const KnownDataset* known = FindKnownDataset(name);
  if (!url) {
    if (known == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("no download URL known for '", name, "'; pass --url"));
    }
    url = known->url;
  }
  if (!expect && known != nullptr) {
    expect = std::make_pair(known->nodes, known->edges);
  }

  DPDENSE_ASSIGN_OR_RETURN(const std::string text, FetchBytes(*url));
  ParseOptions options;
  options.remap_ids = true;
  DPDENSE_ASSIGN_OR_RETURN(const Graph graph, ParseEdgeList(text, options));

  FetchResult result;
  result.nodes = graph.num_nodes();
  result.edges = graph.num_edges();
  if (expect &&
      (expect->first != result.nodes || expect->second != result.edges)) {
    result.mismatch =
        absl::StrCat("expected n=", expect->first, " m=", expect->second,
                     ", got n=", result.nodes, " m=", result.edges);
  }

  const std::filesystem::path dir = CacheDirectory();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", dir.string(), ": ", ec.message()));
  }
  result.path = (dir / (name + ".txt")).string();
  DPDENSE_RETURN_IF_ERROR(WriteEdgeListFile(graph, result.path));
  return result;
}

}  // namespace dpdense
