#pragma once

#include <filesystem>
#include <random>
#include <string>

namespace hgrid::testing {

inline std::filesystem::path data_dir() { return HGRID_TEST_DATA_DIR; }
inline std::filesystem::path config_dir() { return HGRID_CONFIG_DIR; }

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("hgrid-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(TempDir const&) = delete;
    TempDir& operator=(TempDir const&) = delete;

    std::filesystem::path const& path() const { return path_; }
    std::filesystem::path operator/(std::string const& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

} // namespace hgrid::testing
