#pragma once

#include "kflag/relations.hpp"

namespace kflag {

Composition full_flag_weight(int N);

// Demazure formula on K(Fl)
Matrix hecke_T(const Model& model, int i);
// E_{i,0} F_{i,0} (or F_{i,0} E_{i,0}) at weight (1,...,1)
Matrix hecke_T_geometric(const Model& model, int i, bool e_after_f = true);
// multiplication by a_j^p
Matrix hecke_X(const Model& model, int j, int p);

std::vector<RelationInstance> hecke_instances(int N);

RelationReport verify_hecke(int N, int jobs = 1);

}
