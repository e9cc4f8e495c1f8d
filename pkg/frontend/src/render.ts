import { ExplorerController } from "./controller.js";
import { arrows, curveControl, vertexPositions } from "./layout.js";
import { canUndo } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const RADIUS = 150;
const CENTER = 200;

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

export function renderQuiver(svg: SVGSVGElement, controller: ExplorerController): void {
  svg.innerHTML = "";
  const state = controller.state;
  if (!state) return;
  const q = state.current;
  const size = q.n + q.frozen;
  const pos = vertexPositions(size, RADIUS).map((p) => ({
    x: CENTER + p.x,
    y: CENTER + p.y,
  }));

  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrowhead",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#2563eb" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (const spec of arrows(q)) {
    const from = pos[spec.from];
    const to = pos[spec.to];
    const ctrl = curveControl(
      { x: from.x, y: from.y },
      { x: to.x, y: to.y },
      spec,
    );
    // shrink the endpoints toward the control point so arrows stop at the disc
    const shrink = (p: { x: number; y: number }, towards: { x: number; y: number }) => {
      const d = Math.hypot(towards.x - p.x, towards.y - p.y) || 1;
      const t = 24 / d;
      return { x: p.x + (towards.x - p.x) * t, y: p.y + (towards.y - p.y) * t };
    };
    const a = shrink(from, ctrl);
    const b = shrink(to, ctrl);
    const path = svgEl("path", {
      d: `M ${a.x} ${a.y} Q ${ctrl.x} ${ctrl.y} ${b.x} ${b.y}`,
      fill: "none",
      stroke: "#2563eb",
      "stroke-width": "1.6",
      "marker-end": "url(#arrowhead)",
    });
    svg.appendChild(path);
    if (spec.weight > 2) {
      const label = svgEl("text", {
        x: String(ctrl.x),
        y: String(ctrl.y - 4),
        "text-anchor": "middle",
        class: "edge-weight",
      });
      label.textContent = String(spec.weight);
      svg.appendChild(label);
    }
  }

  for (let i = 0; i < size; i++) {
    const frozen = i >= q.n;
    const group = svgEl("g", { class: frozen ? "vertex frozen" : "vertex mutable" });
    const shape = frozen
      ? svgEl("rect", {
          x: String(pos[i].x - 16),
          y: String(pos[i].y - 16),
          width: "32",
          height: "32",
          rx: "4",
        })
      : svgEl("circle", {
          cx: String(pos[i].x),
          cy: String(pos[i].y),
          r: "18",
        });
    group.appendChild(shape);
    const label = svgEl("text", {
      x: String(pos[i].x),
      y: String(pos[i].y + 5),
      "text-anchor": "middle",
    });
    label.textContent = String(i + 1);
    group.appendChild(label);
    if (!frozen) {
      group.addEventListener("click", () => {
        void controller.clickVertex(i + 1);
      });
    }
    svg.appendChild(group);
  }
}

export function renderInfo(root: HTMLElement, controller: ExplorerController): void {
  const info = controller.info;
  const chip = (value: string | undefined, error: string | undefined) =>
    error
      ? `<span class="chip error" title="${error}">error</span>`
      : value ?? "…";
  const periodText =
    info.periodError !== undefined
      ? chip(undefined, info.periodError)
      : info.period === undefined
        ? "…"
        : info.period === null
          ? `<span class="badge none">none &le; max</span>`
          : `<span class="badge">period ${info.period}</span>`;
  const terms =
    info.terms?.map((t) => `<span class="term">${t}</span>`).join(" ") ??
    chip(undefined, info.termsError);
  root.innerHTML = `
    <div class="info-row"><span class="label">periodicity</span> ${periodText}</div>
    <div class="info-row"><span class="label">recurrence</span> <code>${
      info.formulaError ? chip(undefined, info.formulaError) : info.formula ?? "…"
    }</code></div>
    <div class="info-row"><span class="label">primitive layers</span> <code>${
      info.decompositionError
        ? chip(undefined, info.decompositionError)
        : info.decomposition ?? "…"
    }</code></div>
    <div class="info-row"><span class="label">first ${
      info.terms?.length ?? 12
    } terms</span> <div class="terms">${terms}</div></div>
  `;
}

export function renderChrome(controller: ExplorerController): void {
  const banner = document.getElementById("banner")!;
  banner.textContent = controller.banner ?? "";
  banner.style.display = controller.banner ? "block" : "none";
  const undoButton = document.getElementById("undo") as HTMLButtonElement;
  undoButton.disabled = !controller.state || !canUndo(controller.state);
  const historyEl = document.getElementById("history")!;
  const clicks = controller.state?.history.map((h) => h.vertex) ?? [];
  historyEl.textContent = clicks.length
    ? `mutations: ${clicks.join(" → ")}`
    : "no mutations yet";
}
