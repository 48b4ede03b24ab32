"""Matplotlib figures written next to the CLI's data exports.

Everything renders through the non-interactive Agg backend and closes its
figure after saving, so these functions are safe in batch jobs.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

# d = +1 regions blue, d = -1 regions red
ORIENTATION_COLORS = {1: "tab:blue", -1: "tab:red"}


def _save(fig, path, dpi):
    fig.savefig(path, dpi=dpi, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path


def _draw_sphere(ax, geometry, title):
    phi, th = np.mgrid[0 : 2 * np.pi : 40j, 0 : np.pi : 20j]
    ax.plot_wireframe(np.cos(phi) * np.sin(th), np.sin(phi) * np.sin(th), np.cos(th), color="0.85", linewidth=0.4)
    for k in range(3):
        e = np.zeros(3)
        e[k] = 1.0
        ax.quiver(0, 0, 0, *e, color="0.55", linewidth=0.6, arrow_length_ratio=0.08)
    b = np.asarray(geometry.bloch_vector)
    if np.linalg.norm(b) > 0:
        ax.quiver(0, 0, 0, *b, color="tab:red", linewidth=2, arrow_length_ratio=0.1)
    for i, vec in geometry.axes:
        vec = np.asarray(vec)
        if np.linalg.norm(vec) == 0:
            continue
        ax.plot([0, vec[0]], [0, vec[1]], [0, vec[2]], linestyle="--", color="tab:blue", linewidth=1.5)
        ax.text(*(1.08 * vec), str(i), color="tab:blue")
    ax.set_xlim(-1, 1)
    ax.set_ylim(-1, 1)
    ax.set_zlim(-1, 1)
    ax.set_box_aspect((1, 1, 1))
    ax.set_title(title)
    ax.set_axis_off()


def plot_sphere_pair(geometries, path, dpi=120):
    """Bloch-sphere pair: Bloch vector in red, scaled correlation axes dashed blue."""
    fig = plt.figure(figsize=(8, 4))
    for n, (geom, title) in enumerate(zip(geometries, ("qubit 1", "qubit 2")), start=1):
        _draw_sphere(fig.add_subplot(1, 2, n, projection="3d"), geom, title)
    return _save(fig, path, dpi)


def plot_scan(result, path, dpi=120, max_points=20000):
    """Scatter of the physical region for each requested orientation."""
    spec = result.spec
    labels = ("x1", "x2", "x3") if spec.mode.value == "SingularValue" else ("g1", "g2", "g3")
    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(projection="3d")
    ax.set_box_aspect(None, zoom=0.85)
    stride = max(1, len(result.coords) // max_points)
    for d in spec.orientations:
        pts = result.coords[result.physical[d]][::stride]
        if len(pts):
            ax.scatter(pts[:, 0], pts[:, 1], pts[:, 2], s=2, alpha=0.25,
                       color=ORIENTATION_COLORS[d], label=f"d = {d:+d}")
    for setter, (lo, hi) in zip((ax.set_xlim, ax.set_ylim, ax.set_zlim), spec.ranges):
        setter(lo, hi)
    ax.set_xlabel(labels[0])
    ax.set_ylabel(labels[1])
    ax.set_zlabel(labels[2])
    fixed = ", ".join(f"{k} = {list(v)}" for k, v in spec.fixed.items())
    ax.set_title(f"{spec.mode.value} scan ({fixed})", fontsize=9)
    if ax.get_legend_handles_labels()[0]:
        ax.legend(loc="upper left")
    return _save(fig, path, dpi)


def plot_singular_value_curve(thetas, values, path, dpi=120):
    """Singular values against the nonlocal angle."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    values = np.asarray(values)
    for i in range(values.shape[1]):
        ax.plot(thetas, values[:, i], label=f"x{i + 1}")
    ax.set_xlabel(r"$\theta_1$")
    ax.set_ylabel("singular value")
    ax.set_xlim(thetas[0], thetas[-1])
    ax.legend()
    return _save(fig, path, dpi)
