#pragma once

// Umbrella header.

#include "bigcount.hpp"
#include "diagram.hpp"
#include "dfs.hpp"
#include "io.hpp"
#include "layout.hpp"
#include "map.hpp"
#include "perm.hpp"
#include "poset.hpp"
#include "quasitree.hpp"
#include "words.hpp"
