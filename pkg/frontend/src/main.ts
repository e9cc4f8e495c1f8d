import { ApiClient } from "./api.js";
import { ExplorerController } from "./controller.js";
import { renderChrome, renderInfo, renderQuiver } from "./render.js";

async function boot(): Promise<void> {
  const svg = document.getElementById("quiver") as unknown as SVGSVGElement;
  const infoRoot = document.getElementById("info")!;
  const presetSelect = document.getElementById("preset") as HTMLSelectElement;
  const undoButton = document.getElementById("undo") as HTMLButtonElement;

  const controller = new ExplorerController(new ApiClient(), () => {
    renderQuiver(svg, controller);
    renderInfo(infoRoot, controller);
    renderChrome(controller);
  });

  const catalog = await controller.loadCatalog();
  for (const name of catalog.names) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    presetSelect.appendChild(option);
  }
  presetSelect.addEventListener("change", () => {
    void controller.loadPreset(presetSelect.value);
  });
  undoButton.addEventListener("click", () => {
    void controller.undo();
  });

  presetSelect.value = "somos4";
  await controller.loadPreset("somos4");
}

void boot();
