#pragma once

#include "errors.hpp"
#include "permutation.hpp"
#include "word.hpp"
#include "element_set.hpp"
#include "group_table.hpp"
#include "relations.hpp"
#include "palindromes.hpp"
#include "genset.hpp"
#include "genset_file.hpp"
