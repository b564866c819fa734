#ifndef LASCOUX_CACHE_IO_HPP
#define LASCOUX_CACHE_IO_HPP

#include <map>
#include <string>

#include "lascoux/lascoux.hpp"

namespace lascoux {

/// On-disk memo snapshot. Entry keys follow the canonical grammar
/// <TYPE>|I=<comma-ints>|[J=<comma-ints>|]n=<int>, J present exactly for
/// type A; values are the integer LP values as decimal strings.
struct CacheFile {
    int version = 1;
    std::map<std::string, std::string> entries;
};

std::string cache_key(const LascouxKey& key);
LascouxKey parse_cache_key(const std::string& s); // input_error on bad grammar

CacheFile cache_from_memo(const MemoTable& memo);
void memo_from_cache(const CacheFile& file, MemoTable& memo);

CacheFile load_cache(const std::string& path);              // input_error on unreadable/bad file
void save_cache(const CacheFile& file, const std::string& path); // write-temp-then-rename

} // namespace lascoux

#endif
