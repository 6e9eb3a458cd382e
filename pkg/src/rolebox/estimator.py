"""Scikit-learn style front end for compositional-equivalence analysis."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .hierarchy import cumulated_hierarchy, hierarchy_levels
from .position import blockmodel, containment_class_partition
from .rbox import build_relation_box
from .relations import ActorSet, BooleanRelation
from .semigroup import RelationSemigroup, generate_semigroup

__all__ = ["CompositionalEquivalence", "as_relation_stack"]


def as_relation_stack(X, actor_names: Sequence[str] | None = None,
                      relation_names: Sequence[str] | None = None) -> list[BooleanRelation]:
    """Validate a multiplex network given as relations or stacked matrices.

    Accepts a list of BooleanRelation over one actor set, a single n x n
    0/1 matrix, or an array-like of shape (r, n, n); returns a list of
    labelled BooleanRelation.
    """
    if isinstance(X, BooleanRelation):
        X = [X]
    if isinstance(X, (list, tuple)) and X and all(isinstance(r, BooleanRelation) for r in X):
        actors = X[0].actors
        for rel in X[1:]:
            if rel.actors.labels != actors.labels:
                raise ValueError("relations are defined over different actor sets")
        if actor_names is not None and tuple(actor_names) != actors.labels:
            raise ValueError("actor_names disagree with the relations' actor set")
        if relation_names is not None:
            if len(relation_names) != len(X):
                raise ValueError("one relation name per relation is required")
            return [rel.with_label(name) for rel, name in zip(X, relation_names)]
        return list(X)

    arr = np.asarray(X)
    if arr.ndim == 2:
        arr = arr[np.newaxis, :, :]
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise ValueError(
            f"expected a stack of square matrices with shape (r, n, n), got {arr.shape}")
    if arr.size == 0:
        raise ValueError("the relation stack is empty")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("matrix cells must be 0 or 1")
    r, n, _ = arr.shape
    if actor_names is None:
        actor_names = [f"a{i}" for i in range(n)]
    if len(actor_names) != n:
        raise ValueError(f"expected {n} actor names, got {len(actor_names)}")
    if relation_names is None:
        relation_names = [f"R{t + 1}" for t in range(r)]
    if len(relation_names) != r:
        raise ValueError(f"expected {r} relation names, got {len(relation_names)}")
    actors = ActorSet(tuple(actor_names))
    return [BooleanRelation.from_rows(actors, arr[t], relation_names[t])
            for t in range(r)]


class CompositionalEquivalence(ClusterMixin, TransformerMixin, BaseEstimator):
    """Partition the actors of a multiplex network by role-relation containment.

    Fitting builds the relation box of all distinct compound ties up to
    length ``k``, cumulates every actor's perceived containments into a
    single preorder and derives a partition from it. The fitted estimator
    then reduces relation stacks onto the classes with the blockmodel rule,
    so it plugs into scikit-learn pipelines as a transformer and exposes
    ``labels_`` like a clustering estimator.

    Parameters
    ----------
    k : int, default=1
        Longest chain of composed ties taken into account.
    partition : {"level", "mutual"}, default="level"
        "level" merges the containment classes of each hierarchy level;
        "mutual" keeps every mutual-containment class separate. Isolates
        always end up in their own trailing classes.
    include_transposes : bool, default=False
        Add the transpose of each directed relation as a generator.
    weightless : tuple of int, default=()
        Indices of input relations (attribute diagonals, typically) whose
        letters do not consume word length.
    actor_names : sequence of str, optional
        Names for the actors when X is a plain array.
    relation_names : sequence of str, optional
        Names for the relations when X is a plain array.

    Attributes
    ----------
    relations_ : list of BooleanRelation used as generators.
    box_ : RelationBox of distinct string relations.
    hierarchy_ : CumulatedHierarchy, the containment preorder.
    levels_ : HierarchyLevels of the quotient order.
    partition_ : Partition of the actors.
    labels_ : ndarray of shape (n,), class id per actor.

    Examples
    --------
    >>> import numpy as np
    >>> from rolebox import CompositionalEquivalence
    >>> friend = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    >>> helper = np.array([[0, 0, 0], [0, 0, 0], [1, 1, 0]])
    >>> ce = CompositionalEquivalence(k=2).fit([friend, helper])
    >>> ce.labels_
    array([0, 0, 1])
    """

    def __init__(self, k: int = 1, partition: str = "level",
                 include_transposes: bool = False,
                 weightless: tuple[int, ...] = (),
                 actor_names: Sequence[str] | None = None,
                 relation_names: Sequence[str] | None = None):
        self.k = k
        self.partition = partition
        self.include_transposes = include_transposes
        self.weightless = weightless
        self.actor_names = actor_names
        self.relation_names = relation_names

    def fit(self, X, y=None):
        """Build the containment hierarchy of X and partition the actors."""
        relations = as_relation_stack(X, self.actor_names, self.relation_names)
        self.relations_ = relations
        self.actors_ = relations[0].actors
        self.box_ = build_relation_box(relations, self.k,
                                       include_transposes=self.include_transposes,
                                       weightless=self.weightless)
        self.hierarchy_ = cumulated_hierarchy(self.box_)
        self.levels_ = hierarchy_levels(self.hierarchy_)
        self.partition_ = containment_class_partition(self.hierarchy_, self.partition)
        self.labels_ = np.asarray(self.partition_.class_of)
        return self

    def transform(self, X) -> np.ndarray:
        """Blockmodel-reduce a relation stack onto the fitted classes.

        Returns an integer array of shape (r, c, c) where c counts all
        classes of the fitted partition, isolates included.
        """
        check_is_fitted(self, "partition_")
        relations = as_relation_stack(X, self.actors_.labels, None)
        system = blockmodel(relations, self.partition_)
        return np.stack([rel.to_array() for rel in system.relations])

    def role_structure(self, X=None, max_elements: int = 10000,
                       adjoin_identity: bool = False) -> RelationSemigroup:
        """Semigroup generated by the reduced relations of the fitted network.

        With X given, that stack is reduced and closed instead of the
        relations seen during fit.
        """
        check_is_fitted(self, "partition_")
        relations = self.relations_ if X is None else as_relation_stack(
            X, self.actors_.labels, None)
        system = blockmodel(relations, self.partition_)
        return generate_semigroup(system.relations, max_elements=max_elements,
                                  adjoin_identity=adjoin_identity)
