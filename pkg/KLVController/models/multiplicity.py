"""Geometric multiplicity matrices C(psi, gamma)."""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class MultiplicityMatrix:
    """
    Integer matrix indexed by parameter labels

    Attributes:
        labels (tuple): Row and column labels (the same index set on both sides)
        entries (tuple): entries[i][j] = C(labels[i], labels[j])
        dims (dict): Support dimension d(psi) of every label
    """

    labels: tuple
    entries: tuple
    dims: dict = field(default_factory=dict, compare=False)

    def entry(self, row, col):
        return self.entries[self.labels.index(row)][self.labels.index(col)]

    def is_unitriangular(self, order=None):
        """
        Check C(psi, psi) = 1 and C(psi, gamma) = 0 whenever psi comes after gamma

        Args:
            order (list): Labels in a linear extension; defaults to increasing dims

        Returns:
            bool: True if unitriangular with respect to the order
        """
        if order is None:
            order = sorted(self.labels, key=lambda label: (self.dims.get(label, 0), self.labels.index(label)))
        position = {label: k for k, label in enumerate(order)}
        for i, row in enumerate(self.labels):
            for j, col in enumerate(self.labels):
                value = self.entries[i][j]
                if row == col and value != 1:
                    return False
                if row != col and position[row] > position[col] and value != 0:
                    return False
        return True

    def to_dict(self):
        return {
            'labels': list(self.labels),
            'entries': [list(row) for row in self.entries],
            'dims': {str(k): v for k, v in self.dims.items()},
        }
