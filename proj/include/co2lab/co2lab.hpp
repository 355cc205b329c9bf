#pragma once

#include "co2lab/catalog.hpp"
#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"
#include "co2lab/families.hpp"
#include "co2lab/hypergraph.hpp"
#include "co2lab/io.hpp"
#include "co2lab/measures.hpp"
#include "co2lab/morphisms.hpp"
#include "co2lab/named.hpp"
#include "co2lab/random.hpp"
#include "co2lab/report.hpp"
#include "co2lab/search.hpp"
#include "co2lab/uniform_turan.hpp"
