#pragma once

#include "cellsync/network.hpp"
#include "oracles.hpp"

#include <string>

namespace fixture {

// 4 cells; zero eigenvalue with blocks [2,1]
inline const oracle::IntMatrix nilpotent4 = {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
// 4 cells; zero eigenvalue semisimple of multiplicity 2
inline const oracle::IntMatrix fork4 = {{0, 0, 0, 2}, {0, 0, 0, 2}, {0, 1, 0, 1}, {0, 1, 0, 1}};
// 4 cells; three cells with identical inputs
inline const oracle::IntMatrix triple4 = {{0, 0, 0, 2}, {0, 0, 0, 2}, {0, 0, 0, 2}, {0, 0, 1, 1}};
// 5 cells; reduction does not exist
inline const oracle::IntMatrix counter5 = {
    {0, 1, 0, 1, 0}, {1, 0, 0, 0, 1}, {1, 0, 0, 1, 0}, {1, 0, 1, 0, 0}, {1, 1, 0, 0, 0}};

inline std::string data_path(const std::string& file) { return std::string(CELLSYNC_DATA_DIR) + "/" + file; }

inline cellsync::Network load(const std::string& file) { return cellsync::load_network(data_path(file)); }

inline cellsync::Network net(const oracle::IntMatrix& a) { return cellsync::Network::from_adjacency(a); }

} // namespace fixture
