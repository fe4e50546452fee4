"""Best-effort SVG plot emission for the CLI; data files stay the source of truth."""

import numpy as np


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_heatmap(grid, path: str) -> None:
    """Exponent heatmap over (c, alpha); escaped cells are masked out."""
    plt = _pyplot()
    from .lyapunov import LyapunovStatus

    z = grid.exponent_matrix()
    mask = np.array(
        [[cell.status is LyapunovStatus.ESCAPED for cell in row] for row in grid.cells]
    )
    z = np.ma.masked_array(z, mask=mask)
    fig, ax = plt.subplots(figsize=(7, 5))
    extent = [
        grid.alpha_axis[0],
        grid.alpha_axis[-1] if len(grid.alpha_axis) > 1 else grid.alpha_axis[0] + 1,
        grid.c_axis[0],
        grid.c_axis[-1] if len(grid.c_axis) > 1 else grid.c_axis[0] + 1,
    ]
    im = ax.imshow(z, origin="lower", aspect="auto", extent=extent, cmap="viridis")
    fig.colorbar(im, ax=ax, label="Lyapunov exponent")
    ax.set_xlabel("alpha")
    ax.set_ylabel("c")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_bifurcation_scatter(data, path: str) -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 5))
    for value, samples in zip(data.param_values, data.attractor_samples):
        if samples.size:
            ax.plot(np.full(samples.size, value), samples, "k.", markersize=0.5)
    ax.set_xlabel(data.param_name)
    ax.set_ylabel("x")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_histogram(hist, path: str) -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 5))
    widths = np.diff(hist.edges)
    ax.bar(hist.edges[:-1], hist.counts, width=widths, align="edge", edgecolor="none")
    ax.set_xlabel("value")
    ax.set_ylabel("count")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
