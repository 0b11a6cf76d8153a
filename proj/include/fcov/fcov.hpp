#pragma once

#include "fcov/approximation.hpp"
#include "fcov/covering.hpp"
#include "fcov/error.hpp"
#include "fcov/fuzzy_set.hpp"
#include "fcov/grade.hpp"
#include "fcov/infosys.hpp"
#include "fcov/mapping.hpp"
#include "fcov/partition.hpp"
#include "fcov/rational.hpp"
#include "fcov/relation.hpp"
#include "fcov/universe.hpp"
